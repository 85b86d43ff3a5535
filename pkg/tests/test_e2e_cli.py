import pytest
from lxml import etree

from cli import main
from services.ingest_svg import import_svg


@pytest.fixture()
def workdir(tmp_path, fixtures_dir):
    for name in ("picture1.tex", "picture1.scene", "picture1.svg"):
        (tmp_path / name).write_text((fixtures_dir / name).read_text(encoding="utf-8"), encoding="utf-8")
    return tmp_path


def test_convert_scene_to_file(workdir):
    out = workdir / "pic1.tex"
    assert main(["convert", str(workdir / "picture1.scene"), "-o", str(out)]) == 0
    text = out.read_text(encoding="utf-8")
    assert text.startswith("\\begin{picture}(215,283)\n")
    assert "\\put(64,192){\\circle{38}}\n" in text


def test_convert_to_stdout(workdir, capsys):
    assert main(["convert", str(workdir / "picture1.svg"), "--unitlength", "1pt"]) == 0
    captured = capsys.readouterr()
    assert captured.out.splitlines()[:2] == ["\\setlength{\\unitlength}{1pt}", "\\begin{picture}(215,283)"]
    assert captured.err == ""


def test_convert_native_lines(workdir, capsys):
    assert main(["convert", str(workdir / "picture1.scene"), "--line-mode", "native-when-exact"]) == 0
    out = capsys.readouterr().out
    assert "\\put(8,22){\\line(1,0){160}}" in out
    assert "\\put(0,14){\\vector(1,0){209}}" in out


def test_convert_quad_circles(workdir, capsys):
    assert main(["convert", str(workdir / "picture1.scene"), "--circle-mode", "quads:8"]) == 0
    out = capsys.readouterr().out
    assert "\\circle" not in out
    assert len(out.splitlines()) == 22 - 1 + 8


def test_convert_empty_scene(tmp_path, capsys):
    path = tmp_path / "empty.scene"
    path.write_text("# nothing\n", encoding="utf-8")
    assert main(["convert", str(path)]) == 2
    assert "Scene is empty" in capsys.readouterr().err


def test_convert_unreadable(tmp_path, capsys):
    assert main(["convert", str(tmp_path / "missing.scene")]) == 2
    assert main(["convert", str(tmp_path / "picture.png")]) == 2


def test_convert_malformed_scene(tmp_path, capsys):
    path = tmp_path / "bad.scene"
    path.write_text("segment 0 0 1\n", encoding="utf-8")
    assert main(["convert", str(path)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_strict_import_diagnostics(tmp_path, capsys):
    path = tmp_path / "fig.svg"
    path.write_text('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 10 10">'
                    '<ellipse cx="1" cy="1" rx="1" ry="1"/><line x1="0" y1="0" x2="5" y2="5"/></svg>', encoding="utf-8")
    assert main(["convert", str(path)]) == 0
    assert "W03" in capsys.readouterr().err
    assert main(["convert", str(path), "--strict"]) == 1


def test_check_clean(workdir, capsys):
    assert main(["check", str(workdir / "picture1.tex")]) == 0
    captured = capsys.readouterr()
    assert (captured.out, captured.err) == ("", "")


def test_check_errors(tmp_path, capsys):
    path = tmp_path / "bad.tex"
    path.write_text("\\begin{picture}(50,50)\n\\put(10,10){\\line(2,4){10}}\n\\end{picture}\n", encoding="utf-8")
    assert main(["check", str(path)]) == 1
    err = capsys.readouterr().err.splitlines()
    assert err == [f"{path}:2:1: E02 error: Slope components have common divisor 2"]


def test_check_warnings_only(tmp_path, capsys):
    path = tmp_path / "warn.tex"
    path.write_text("\\begin{picture}(50,50)\n\\put(60,10){A}\n\\end{picture}\n", encoding="utf-8")
    assert main(["check", str(path)]) == 0
    assert "W01 warning" in capsys.readouterr().err


def test_check_empty_file(tmp_path):
    path = tmp_path / "empty.tex"
    path.write_text("", encoding="utf-8")
    assert main(["check", str(path)]) == 2


def test_render_tex(workdir):
    out = workdir / "pic1.svg"
    assert main(["render", str(workdir / "picture1.tex"), "-o", str(out)]) == 0
    root = etree.fromstring(out.read_bytes())
    drawn = [el for el in root if etree.QName(el).localname != "defs"]
    assert len(drawn) == 20


def test_render_svg_involution(workdir):
    out = workdir / "out.svg"
    assert main(["render", str(workdir / "picture1.svg"), "-o", str(out)]) == 0
    original, _ = import_svg((workdir / "picture1.svg").read_text(encoding="utf-8"))
    again, _ = import_svg(out.read_text(encoding="utf-8"))
    assert again == original


def test_render_stdout(workdir, capsys):
    assert main(["render", str(workdir / "picture1.scene")]) == 0
    assert capsys.readouterr().out.startswith("<?xml")


def test_roundtrip(workdir, capsys):
    assert main(["roundtrip", str(workdir / "picture1.scene")]) == 0
    distance = float(capsys.readouterr().out.strip())
    assert 0 <= distance <= 1.5


def test_roundtrip_threshold(tmp_path, capsys):
    path = tmp_path / "fig.scene"
    path.write_text("segment 0 0 10.3 5.2\n", encoding="utf-8")
    assert main(["roundtrip", str(path), "--max-distance", "0"]) == 1
    assert float(capsys.readouterr().out) > 0


def test_roundtrip_label(tmp_path, capsys):
    path = tmp_path / "label.scene"
    path.write_text("label 3.2 4.7 V\n", encoding="utf-8")
    assert main(["roundtrip", str(path), "--max-distance", "0"]) == 0
    assert capsys.readouterr().out == "0.000000\n"


def test_format_override(tmp_path, capsys):
    path = tmp_path / "fig.txt"
    path.write_text("label 0 0 A\n", encoding="utf-8")
    assert main(["convert", str(path), "--format", "scene"]) == 0
    assert "\\put(0,0){A}" in capsys.readouterr().out


def test_bad_flag():
    with pytest.raises(SystemExit) as exc:
        main(["convert", "x.scene", "--circle-mode", "ellipse"])
    assert exc.value.code == 2


@pytest.mark.parametrize("flags", [
    ["--t-step", "2"],
    ["--t-step", "1.5"],
    ["--t-step", "0"],
    ["--max-distance", "-1"],
    ["--max-distance", "nan"],
    ["--max-distance", "inf"],
])
def test_roundtrip_bad_numbers(workdir, flags):
    with pytest.raises(SystemExit) as exc:
        main(["roundtrip", str(workdir / "picture1.scene"), *flags])
    assert exc.value.code == 2


def test_roundtrip_coarse_step(workdir, capsys):
    assert main(["roundtrip", str(workdir / "picture1.scene"), "--t-step", "1"]) == 0
    assert float(capsys.readouterr().out) <= 1.5
