import pytest

from waci.quotient import build_waci

# name -> (variable names, relations); every variable has weight 2 unless a
# (name, weight) pair is given.
FIXTURES = {
    "cp2": (["x"], ["x^3"]),
    "cp2#cp2": (["x1", "x2"], ["x1^2 - x2^2", "x1*x2"]),
    "cp1xcp1": (["x1", "x2"], ["x1^2", "x2^2"]),
    "(cp2#cp2)^2": (["x1", "x2", "y1", "y2"], ["x1^2 - x2^2", "x1*x2", "y1^2 - y2^2", "y1*y2"]),
    "(cp2#cp2)xcp2": (["x1", "x2", "x3"], ["x1^2 - x2^2", "x1*x2", "x3^3"]),
    "pp": (["x1", "x2", "x3"], ["x1^2 - x3^2", "x2^2 - x3^2", "x1*x2*x3"]),
    "cp4#cp4": (["x1", "x2"], ["x1^4 - x2^4", "x1*x2"]),
    "cp1^4": (["a", "b", "c", "d"], ["a^2", "b^2", "c^2", "d^2"]),
    "cp1^2xcp2": (["a", "b", "c"], ["a^2", "b^2", "c^3"]),
    "cp1xcp3": (["a", "b"], ["a^2", "b^4"]),
    "cp2xcp2": (["a", "b"], ["a^3", "b^3"]),
    "cp4": (["a"], ["a^5"]),
    "A(0)": (["x", "y"], ["x^3 - x*y^2", "y^3"]),
    "A(2)": (["x", "y"], ["x^3 - x*y^2", "y^3 - 2*x^2*y"]),
    "A(4)": (["x", "y"], ["x^3 - x*y^2", "y^3 - 4*x^2*y"]),
    "B(-1)": (
        ["x1", "x2", "x3", "x4"],
        ["x1^2 - x4^2", "x2^2 - x4^2", "x3^2 - x4^2", "x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4 + x4^2"],
    ),
    "weighted": ([("x", 2), ("y", 4)], ["x^4 - y^2", "x^2*y"]),
    "cp2[6]": ([("x", 6)], ["x^3"]),
}


def build(name):
    names, rels = FIXTURES[name]
    variables = [v if isinstance(v, tuple) else (v, 2) for v in names]
    return build_waci(variables, rels)


@pytest.fixture(params=sorted(FIXTURES))
def fixture_ring(request):
    return request.param, build(request.param)


_criteria = []


def record_criterion(number, ok, detail):
    _criteria.append((number, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
