import json
import math
from pathlib import Path

import mpmath as mp
import pytest

FIXTURES = {f["id"]: f for f in json.loads((Path(__file__).parent / "fixtures" / "derived.json").read_text())}


def fixture_value(fid):
    v = FIXTURES[fid]["value"]
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return complex(v[0], v[1])
    return v


@pytest.fixture
def fx():
    return fixture_value


def mp_li_rational(s, r, q):
    """Li(s, r/q) through the exact Hurwitz combination, evaluated by mpmath.

    The q Hurwitz terms cancel heavily at large |t| and negative sigma, so the
    working precision grows with both.
    """
    s_c = complex(s)
    dps = 30 + int(abs(s_c.imag) / 4) + int(max(0.0, -s_c.real) * math.log10(q))
    with mp.workdps(dps):
        s = mp.mpc(s)
        if abs(s) < 1e-20:
            # mpmath loses digits for |s| this small; Li is entire, so s = 0 is
            # within 1e-20 of the answer
            s = mp.mpc(0)
        if s == 1:
            # every Hurwitz term has a pole at s = 1; Lerch Phi does not
            z = mp.expjpi(2 * mp.mpf(r) / q)
            return complex(z * mp.lerchphi(z, s, 1))
        val = q ** (-s) * mp.fsum(mp.expjpi(2 * mp.mpf(r * n) / q) * mp.zeta(s, mp.mpf(n) / q) for n in range(1, q + 1))
        return complex(val)


def mp_q_rational(s, r, q):
    with mp.workdps(30):
        s = mp.mpc(s)
        a = mp.mpf(r) / q
        val = (mp.zeta(s, a) + mp.zeta(s, 1 - a)) / 2
        return complex(val) + 0.5 * (mp_li_rational(s, r, q) + mp_li_rational(s, q - r, q))


# criterion number -> list of (ok, detail), filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[n]
        verdict = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"C{n}: {verdict}  " + "; ".join(d for _, d in parts))
