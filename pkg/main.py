"""
PaintTeX HTTP service
"""
import logging

import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from conf.config import config
from routes import pictures

logging.basicConfig(level=config.LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")

app = FastAPI(title="PaintTeX")

origins = ['*']

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(pictures.router, prefix='/api')


@app.get("/api/healthchecker")
def healthchecker():
    """Checks that the service answers

    :return: A message
    :rtype: dict
    """
    return {"message": "Welcome to PaintTeX!"}


if __name__ == "__main__":
    uvicorn.run("main:app", host=config.APP_HOST, port=config.APP_PORT)
