"""Long exhaustive runs, excluded from the default suite.

Run with `pytest -m slow tests/test_slow.py -s`.
"""

import time

import pytest

from matroidkit.builders import fano, spiked_fano
from matroidkit.connectivity import is_3_connected
from matroidkit.harness import verify_theorem_main
from matroidkit.minors import detachable_pairs

pytestmark = pytest.mark.slow


def test_main_theorem_on_rank7_spike_construction():
    # the Fano-with-spike glue at spike rank 7 reaches the size gap of ten:
    # 18 elements against the 7-element minor
    t0 = time.perf_counter()
    m = spiked_fano(7)
    assert m.n == 18 and m.n - 7 == 11
    assert is_3_connected(m)
    v = verify_theorem_main(m, fano())
    assert v.outcome == "pass"
    assert v.witness == "spike-like-separator"
    print(f"\nrank-7 spike construction verified via {v.witness} "
          f"in {time.perf_counter() - t0:.0f}s")


def test_rank5_spike_construction_has_no_direct_pairs():
    # one size up from the acceptance replay: 14 elements, gap 7
    m = spiked_fano(5)
    assert is_3_connected(m)
    assert detachable_pairs(m, fano()) == []
