import json
import subprocess
import sys

import pytest

from ru4.cli import run

TRUE_G15 = "x^11+2x^9+x^8+3x^7+x^5+2x^4+3x^3+x^2+3x+3"
LISTED_G15 = "x^11+2x^9+3x^8+3x^7+x^6+2x^4+3x^3+x^2+3x+3"
ALT = "x^4+3x^3+2x^2+1"

GOLDEN = {
    ("factor", "-n", "7", "--ring", "z4", "--json"): '{"cosets": [[0], [1, 2, 4], [3, 5, 6]], "factors": ["x+3", "x^3+2x^2+x+3", "x^3+3x^2+2x+3"], "n": 7, "ring": "Z4"}\n',
    ("lift", "-g", "x^3+x+1", "-n", "7", "--ring", "z4", "--json"): '{"input": "x^3+x+1", "lift": "x^3+2x^2+x+3", "ring": "Z4"}\n',
    ("minpoly", "-n", "15", "-i", "1", "-i", "7", "--json"): '{"lcm": "x^8+3x^7+x^5+3x^4+x^3+3x+1", "minimal_polynomials": {"1": "x^4+2x^2+3x+1", "7": "x^4+3x^3+2x^2+1"}, "n": 15, "r": 4}\n',
    ("code", "idempotent", "-n", "3", "-g", "x+3", "--json"): '{"dual_idempotent": "3x^2+3x+3", "idempotent": "x^2+x+2", "n": 3}\n',
    ("code", "enumerate", "-n", "3", "--count-only"): "63\n",
    ("code", "enumerate", "-n", "3", "--count-only", "--choices", "unit-line"): "49\n",
    ("code", "gray", "-n", "1", "-g", "2u", "--json"): '{"generator_images": [[2, 2]], "length": 2, "n": 1, "size": 2}\n',
    ("code", "distance", "-n", "3", "-g", "x+3", "--metric", "lee"): "2\n",
}


@pytest.mark.parametrize("argv", list(GOLDEN))
def test_golden(argv):
    status, out, err = run(list(argv))
    assert status == 0, err
    assert out == GOLDEN[argv]
    # stable across runs
    assert run(list(argv))[1] == out


def test_factor_text_and_paper_style():
    _, out, _ = run(["factor", "-n", "7", "--ring", "z4", "--paper-style"])
    assert "x^3+2x^2+x-1" in out and "x^3-x^2+2x-1" in out and "x-1" in out
    _, out, _ = run(["factor", "-n", "7", "--ring", "z4"])
    assert "x^3+2x^2+x+3" in out


def test_galois_table():
    status, out, _ = run(["galois", "--galois-r", "4", "--modulus", ALT])
    assert status == 0
    lines = out.splitlines()
    assert lines[1].strip() == "xi^4 = xi^3+2xi^2+3"
    assert lines[-1].strip() == "xi^15 = 1"
    assert len(lines) == 13
    status, out, _ = run(["galois", "--galois-r", "4", "--modulus", ALT, "--json"])
    data = json.loads(out)
    assert data["r"] == 4


def test_analyze_true_flagship():
    status, out, _ = run(["code", "analyze", "-n", "15", "-g", TRUE_G15, "--json"])
    data = json.loads(out)
    assert status == 0
    assert data["summary"]["free"] is True
    assert data["summary"]["free_rank"] == 4
    assert data["summary"]["dH"] == 8
    assert data["summary"]["size"] == 65536
    assert list(data) == sorted(data)


def test_analyze_listed_flagship_is_not_free():
    # the listed polynomial is not a divisor of x^15-1; the code it generates is not free
    status, out, _ = run(["code", "analyze", "-n", "15", "-g", LISTED_G15, "--json"])
    data = json.loads(out)
    assert status == 0
    assert data["summary"]["free"] is False
    assert data["summary"]["dH"] is None


def test_bch_alt_modulus():
    status, out, _ = run(["code", "bch", "-n", "15", "-g", TRUE_G15, "--modulus", ALT, "--json"])
    data = json.loads(out)
    assert status == 0
    assert data["bound"] == 8 and data["longest_run"] == 7 and data["run_start"] == 0
    assert data["root_exponents"] == [0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12]


def test_dual_reports_size_product():
    _, out, _ = run(["code", "dual", "-n", "3", "-g", "x+3", "--json"])
    data = json.loads(out)
    assert data["size_product"] == 16**3
    assert data["g"] == "x^2+x+1"


def test_max_enum_flag_skips_distances():
    _, out, _ = run(["code", "analyze", "-n", "7", "-g", "1", "--max-enum", "10", "--json"])
    data = json.loads(out)
    assert data["summary"]["dH"] is None and data["summary"]["size"] == 16**7


def test_env_bound(monkeypatch):
    monkeypatch.setenv("RU4_MAX_ENUM", "10")
    status, _, err = run(["code", "distance", "-n", "3", "-g", "x+3"])
    assert status == 3 and "enumeration bound" in err


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        (["code", "analyze", "-n", "4", "-g", "x+1"], 3, "length must be odd"),
        (["factor", "-n", "8"], 3, "length must be odd"),
        (["code", "analyze", "-n", "3", "--bogus"], 2, "unrecognized"),
        (["nonsense"], 2, ""),
        (["code", "analyze", "-n", "3", "-g", "x+?"], 2, ""),
        (["lift", "-g", "x^2+x+1", "-n", "7"], 3, "precondition violated"),
        (["code", "idempotent", "-n", "3", "-g", "x+1"], 3, "precondition violated"),
    ],
)
def test_exit_codes(argv, code, needle):
    status, _, err = run(argv)
    assert status == code
    assert needle in err


def test_console_script_entry():
    p = subprocess.run([sys.executable, "-m", "ru4.cli", "code", "enumerate", "-n", "1", "--count-only"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "7\n"
