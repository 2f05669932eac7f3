import pytest

from reesselab import fixtures as fx
from reesselab.attack import AttackFilter, run_attack


@pytest.fixture(scope="session")
def table2_report():
    """The full scan of the ten-element reference key, computed once.

    The candidate ceiling is pinned to the historical program's printed
    value so the report replays its run exactly.
    """
    _, pub = fx.case5_keypair()
    filt = AttackFilter(use_jump=True, max_a_override=fx.CASE5_MAX_A_PRINTED)
    return run_attack(pub, filt, pub.rho)
