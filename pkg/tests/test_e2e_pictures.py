from lxml import etree

from conf import messages
from conf.config import config


def test_healthchecker(client):
    response = client.get("/api/healthchecker")
    assert response.status_code == 200, response.text
    assert response.json() == {"message": "Welcome to PaintTeX!"}


def test_convert_scene(client, picture1_scene):
    response = client.post("/api/pictures/convert", json={"source": picture1_scene})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data["picture"].startswith("\\begin{picture}(215,283)\n")
    assert data["diagnostics"] == []


def test_convert_svg_with_options(client, picture1_svg):
    response = client.post("/api/pictures/convert", json={
        "source": picture1_svg,
        "format": "svg",
        "line_mode": "native-when-exact",
        "circle_mode": "quads:8",
        "unitlength": "0.5mm",
    })
    assert response.status_code == 200, response.text
    picture = response.json()["picture"]
    assert picture.startswith("\\setlength{\\unitlength}{0.5mm}\n")
    assert "\\put(8,22){\\line(1,0){160}}" in picture
    assert "\\circle" not in picture


def test_convert_reports_import_diagnostics(client):
    source = ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 10 10">'
              '<ellipse cx="1" cy="1" rx="1" ry="1"/><line x1="0" y1="0" x2="5" y2="5"/></svg>')
    response = client.post("/api/pictures/convert", json={"source": source, "format": "svg"})
    assert response.status_code == 200, response.text
    diagnostics = response.json()["diagnostics"]
    assert [d["rule"] for d in diagnostics] == ["W03"]
    assert diagnostics[0]["severity"] == "warning"


def test_convert_strict_svg(client):
    source = ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 10 10">'
              '<ellipse cx="1" cy="1" rx="1" ry="1"/></svg>')
    response = client.post("/api/pictures/convert", json={"source": source, "format": "svg", "strict": True})
    assert response.status_code == 422, response.text


def test_convert_bad_svg(client):
    response = client.post("/api/pictures/convert", json={"source": "<svg", "format": "svg"})
    assert response.status_code == 422, response.text


def test_convert_empty_scene(client):
    response = client.post("/api/pictures/convert", json={"source": "# nothing\n"})
    assert response.status_code == 400, response.text
    assert response.json()["detail"] == messages.EMPTY_SCENE


def test_convert_tex_with_lint_errors(client):
    source = "\\begin{picture}(50,50)\n\\put(10,10){\\line(2,4){10}}\n\\end{picture}\n"
    response = client.post("/api/pictures/convert", json={"source": source, "format": "tex"})
    assert response.status_code == 400, response.text
    assert response.json()["detail"] == ["E02: Slope components have common divisor 2"]


def test_convert_invalid_options(client, picture1_scene):
    response = client.post("/api/pictures/convert", json={"source": picture1_scene, "circle_mode": "ellipse"})
    assert response.status_code == 422, response.text
    response = client.post("/api/pictures/convert", json={"source": picture1_scene, "scale": 0})
    assert response.status_code == 422, response.text
    response = client.post("/api/pictures/convert", json={"source": ""})
    assert response.status_code == 422, response.text


def test_check_clean(client, picture1_tex):
    response = client.post("/api/pictures/check", json={"source": picture1_tex})
    assert response.status_code == 200, response.text
    assert response.json() == {"ok": True, "diagnostics": []}


def test_check_errors(client):
    source = "\\begin{picture}(50,50)\n\\put(10,10){\\line(2,4){10}}\n\\end{picture}\n"
    response = client.post("/api/pictures/check", json={"source": source})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data["ok"] is False
    assert data["diagnostics"] == [{
        "rule": "E02",
        "severity": "error",
        "message": "Slope components have common divisor 2",
        "line": 2,
        "column": 1,
    }]


def test_check_missing_header(client):
    response = client.post("/api/pictures/check", json={"source": "\\put(1,1){A}\n"})
    assert response.status_code == 422, response.text


def test_render(client, picture1_tex):
    response = client.post("/api/pictures/render", json={"source": picture1_tex, "format": "tex"})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data["element_count"] == 20
    root = etree.fromstring(data["svg"].encode("utf-8"))
    assert etree.QName(root).localname == "svg"


def test_roundtrip(client, picture1_scene):
    response = client.post("/api/pictures/roundtrip", json={"source": picture1_scene})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data["passed"] is True
    assert data["max_distance"] == config.DEFAULT_MAX_DISTANCE
    assert 0 <= data["distance"] <= data["max_distance"]
    assert data["picture"].startswith("\\begin{picture}(215,283)")


def test_roundtrip_threshold(client):
    response = client.post("/api/pictures/roundtrip", json={"source": "segment 0 0 10.3 5.2\n", "max_distance": 0})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data["passed"] is False
    assert data["distance"] > 0


def test_source_too_large(client, monkeypatch):
    monkeypatch.setattr(config, "MAX_SOURCE_LENGTH", 10)
    response = client.post("/api/pictures/convert", json={"source": "label 0 0 long enough\n"})
    assert response.status_code == 413, response.text
    assert response.json()["detail"] == messages.SOURCE_TOO_LARGE
