"""Extended-precision oracles shared by the test modules (mpmath, 50+ digits)."""

import mpmath as mp
import pytest

ORACLE_DPS = 60


def mp_t_tilde(mu, nu, x, dps=ORACLE_DPS):
    """Series for t~ in wide precision, with 1/Gamma at poles taken as 0."""
    with mp.workdps(dps):
        mu, nu, x = mp.mpf(mu), mp.mpf(nu), mp.mpf(x)
        a = (mu - nu + 3) / 2
        b = (mu + nu + 3) / 2
        h = x / 2
        total = mp.mpf(0)
        k = 0
        while True:
            term = h ** (mu + 2 * k + 1) * mp.rgamma(k + a) * mp.rgamma(k + b)
            total += term
            if k > 5 and k + a > 0 and k + b > 0 and abs(term) < mp.mpf(10) ** (-dps) * abs(total):
                break
            k += 1
        return total


def mp_F(mu, nu, beta, x, power=None, dps=30):
    """exp(beta x) x**-power int_0^x exp(-beta u) u**power t~(mu, nu, u) du by term-wise integration."""
    power = nu if power is None else power
    with mp.workdps(dps):
        mu, nu, beta, x, power = (mp.mpf(v) for v in (mu, nu, beta, x, power))
        a = (mu - nu + 3) / 2
        b = (mu + nu + 3) / 2
        total = mp.mpf(0)
        k = 0
        while True:
            c = mp.rgamma(k + a) * mp.rgamma(k + b) / 2 ** (mu + 2 * k + 1)
            s = mu + power + 2 * k + 2
            if beta == 0:
                piece = x**s / s
            else:
                piece = mp.gammainc(s, 0, beta * x) / beta**s
            term = c * piece
            total += term
            if k > 5 and k + a > 0 and k + b > 0 and abs(term) < mp.mpf(10) ** (-dps) * abs(total):
                break
            k += 1
        return total * mp.exp(beta * x) * x ** (-power)


@pytest.fixture(scope="session")
def oracle():
    return mp_t_tilde


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    """Collects one pass/fail line per acceptance criterion; printed after the run."""

    def record(criterion, passed, detail):
        line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'} ({detail})"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
