"""Session-scoped recurrence tables shared across test modules.

Building a table to size N costs the same as building every smaller size,
so the fixtures build once at the largest size any test needs and the
tests index into them.
"""

import pytest

from schrodist.tables import (
    A_CASES,
    build_a_table,
    build_de_tables,
    build_r_table,
    build_u_table,
    schroeder_triangle,
)


@pytest.fixture(scope="session")
def utab():
    return build_u_table(12)


@pytest.fixture(scope="session")
def rtab():
    return build_r_table(12)


@pytest.fixture(scope="session")
def detab():
    return build_de_tables(12)


@pytest.fixture(scope="session")
def atabs():
    return {case: build_a_table(12, case) for case in A_CASES}


@pytest.fixture(scope="session")
def triangle():
    return schroeder_triangle(12)
