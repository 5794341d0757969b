import numpy as np
import pytest

from islandwt import calibrate, catalog, normal_scenarios, synthesize
from islandwt.synth import catalog_pairs

ACCEPTANCE_RESULTS = []


def record(criterion, passed, detail=""):
    ACCEPTANCE_RESULTS.append((criterion, bool(passed), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def catalog_waveforms():
    return [(sc, synthesize(sc)) for sc in catalog()]


@pytest.fixture(scope="session")
def normal_waveforms():
    return [(sc, synthesize(sc)) for sc in normal_scenarios()]


@pytest.fixture(scope="session")
def pair_waveforms():
    return [(row, synthesize(f), synthesize(i)) for row, f, i in catalog_pairs()]


@pytest.fixture(scope="session")
def calibrated(catalog_waveforms, normal_waveforms):
    labeled = [(w, sc.kind) for sc, w in catalog_waveforms + normal_waveforms]
    return calibrate(labeled)
