import pytest

from proxikit import FiniteSpace, cyclic_group, probe_table


@pytest.fixture(scope="session")
def trunc_offset_probes():
    """Seven sample points with truncation and +0.3 probes, x10 fixed point.

    Points -1.5, -1, 0, 0.3, 1, 1.3, 2.5; first probe truncates toward zero,
    second adds 0.3 to integers and keeps non-integers.  Integer points
    collide with their +0.3 translates, e.g. 1 and 1.3 share (10, 13).
    """
    labels = ("-1.5", "-1", "0", "0.3", "1", "1.3", "2.5")
    space = FiniteSpace(labels)
    points = (-1.5, -1.0, 0.0, 0.3, 1.0, 1.3, 2.5)
    values = []
    for y in points:
        phi1 = int(y) * 10
        phi2 = round((y + 0.3) * 10) if float(y).is_integer() else round(y * 10)
        values.append((phi1, phi2))
    return probe_table(space, values)


@pytest.fixture(scope="session")
def z7_on_samples(trunc_offset_probes):
    """Cyclic structure on the seven sample points (index addition mod 7)."""
    return cyclic_group(7).with_labels(trunc_offset_probes.space.labels)
