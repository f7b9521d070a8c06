"""Hill-climbing engine and search driver contracts."""
import threading

import numpy as np
import pytest

from sboxkit import (
    SBox,
    SBoxError,
    is_bijective,
    nonlinearity,
    wcf,
)
from sboxkit.generate import RandomSource
from sboxkit.search import (
    DOCUMENTED_SUCCESS_SEED,
    SearchConfig,
    SearchState,
    WcfEngine,
    local_search,
    progress,
)


def test_engine_matches_full_wcf_and_nl():
    rng = RandomSource(5)
    table = rng.permutation(64)
    engine = WcfEngine(table, 6, 0, 3)
    box = engine.snapshot_sbox()
    assert engine.total == int(wcf(box))
    assert engine.nonlinearity() == nonlinearity(box)


@pytest.mark.parametrize("x,r", [(0, 3), (4, 3), (0, 2), (2, 0)])
def test_engine_incremental_bit_exact(x, r):
    rng = RandomSource(6)
    engine = WcfEngine(rng.permutation(32), 5, x, r)
    for _ in range(800):
        i, j = rng.index_pair(32)
        total, context = engine.propose_swap(i, j)
        if context is not None and total < engine.total:
            engine.apply_swap(context)
    spectra, costs, total = engine.recompute()
    assert np.array_equal(spectra, engine.spectra)
    assert np.array_equal(costs, engine.costs)
    assert total == engine.total
    assert engine.total == int(wcf(engine.snapshot_sbox(), x, r))


def test_config_validation():
    with pytest.raises(SBoxError):
        SearchConfig(n=4, target_nl=9).validate()  # > 2^(n-1)
    with pytest.raises(SBoxError):
        SearchConfig(max_iterations=0).validate()
    with pytest.raises(SBoxError):
        SearchConfig(restarts=-1).validate()
    with pytest.raises(SBoxError):
        SearchConfig(n=13).validate()
    SearchConfig().validate()


def test_target_zero_succeeds_immediately():
    state = local_search(SearchConfig(n=4, target_nl=0, max_iterations=10, seed=3))
    assert state.status == "succeeded"
    assert state.iteration == 0
    assert is_bijective(state.current)


def test_search_deterministic():
    config = SearchConfig(n=6, target_nl=20, max_iterations=5000, restarts=1, seed=42)
    first: list[SearchState] = []
    second: list[SearchState] = []
    a = local_search(config, progress_sink=first.append)
    b = local_search(config, progress_sink=second.append)
    assert a == b
    assert first == second


def test_accepted_wcf_strictly_decreasing():
    # Replicate the acceptance rule against the engine; the accepted-cost
    # sequence must be strictly decreasing and end bit-exact vs recomputation.
    rng = RandomSource(9)
    engine = WcfEngine(rng.permutation(64), 6, 0, 3)
    accepted = [engine.total]
    for _ in range(4000):
        i, j = rng.index_pair(64)
        total, context = engine.propose_swap(i, j)
        if context is not None and total < engine.total:
            engine.apply_swap(context)
            accepted.append(engine.total)
    assert len(accepted) > 10
    assert all(later < earlier for earlier, later in zip(accepted, accepted[1:]))
    assert engine.total == int(wcf(engine.snapshot_sbox()))


def test_snapshot_wcf_non_increasing_within_restart():
    config = SearchConfig(n=6, target_nl=24, max_iterations=4000, restarts=1, seed=9)
    snapshots: list[SearchState] = []
    local_search(config, progress_sink=snapshots.append)
    # WCF only changes at accepted moves, which strictly decrease it; a rise
    # between consecutive snapshots is legal only at a restart boundary.
    for prev, cur in zip(snapshots, snapshots[1:]):
        if cur.current_wcf > prev.current_wcf:
            assert cur.iteration % config.max_iterations == 0


def test_search_reaches_target_and_result_verifies():
    config = SearchConfig(
        n=8, target_nl=100, max_iterations=1_000_000, restarts=4,
        seed=DOCUMENTED_SUCCESS_SEED,
    )
    state = local_search(config)
    assert state.status == "succeeded"
    assert is_bijective(state.current)
    assert nonlinearity(state.current) >= 100
    assert state.best_nl >= 100


def test_search_exhausts_budget():
    config = SearchConfig(n=4, target_nl=6, max_iterations=50, restarts=2, seed=1)
    state = local_search(config)
    # NL 6 exceeds what 4-bit permutations can reach (optimum is 4), so the
    # budget must be spent across all three starts.
    assert state.status == "exhausted"
    assert state.iteration == 50 * 3


def test_cancellation():
    cancel = threading.Event()
    seen = []

    def sink(state):
        seen.append(state)
        if state.iteration >= 1000:
            cancel.set()

    config = SearchConfig(n=8, target_nl=112, max_iterations=100_000, seed=2)
    state = local_search(config, progress_sink=sink, cancel=cancel)
    assert state.status == "cancelled"
    assert state.iteration <= 2001


def test_progress_snapshots_cadence():
    config = SearchConfig(n=6, target_nl=26, max_iterations=5000, restarts=0, seed=11)
    snapshots = []
    local_search(config, progress_sink=snapshots.append)
    iterations = [s.iteration for s in snapshots]
    # at least one snapshot per 1000 iterations
    for mark in range(1000, 5001, 1000):
        assert any(i >= mark - 1000 and i <= mark for i in iterations)


def test_progress_fraction():
    box = SBox.identity(4)
    make = lambda best: SearchState(
        current=box, current_wcf=0.0, current_nl=best, iteration=0,
        best_nl=best, status="running",
    )
    config = SearchConfig(n=8, target_nl=100)
    assert progress(make(0), config) == 0.0
    assert progress(make(96), config) == 0.96
    assert progress(make(100), config) == 1.0
    assert progress(make(112), config) == 1.0
    assert progress(make(0), SearchConfig(n=8, target_nl=0)) == 1.0
