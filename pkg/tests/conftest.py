import numpy as np
import pytest

from lrcross import FieldSpec, QQ, VALID_INSTANCES

F5, F7 = FieldSpec.prime(5), FieldSpec.prime(7)
FIELDS = (QQ, F7)


def fields_for(name):
    """Fields an instance is exercised over: Q and F7 always, F5 for the Sweedler one."""
    return (QQ, F7, F5) if name.startswith("sweedler") else (QQ, F7)


INSTANCE_FIELDS = [(n, f) for n in VALID_INSTANCES for f in fields_for(n)]


def as_ints(t):
    """Integer numpy copy of an integer-valued tensor (plain einsum oracles)."""
    flat = [int(v) for v in t.data.flat]
    assert all(int(v) == v for v in t.data.flat)
    return np.array(flat, dtype=np.int64).reshape(t.shape)


def reduce(arr, field):
    return arr % field.p if field.p else arr


@pytest.fixture(params=FIELDS, ids=str)
def field(request):
    return request.param


_ACCEPTANCE = []


def record_acceptance(line):
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
