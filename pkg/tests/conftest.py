import pytest
from hypothesis import settings, strategies as st

from onbdual.field import GF, ExtensionField, FieldElement, smallest_irreducible

settings.register_profile("default", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("default")

_CRITERIA: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        _CRITERIA.append(line)
        print(line)
        return ok

    return record


def F4():
    return ExtensionField(GF(2), [1, 1, 1])


def F16():
    return ExtensionField(GF(2), [1, 1, 1, 1, 1])


def F81():
    return ExtensionField(GF(3), [1, 1, 1, 1, 1])


def F8():
    return ExtensionField(GF(2), [1, 1, 0, 1])


def sample_fields():
    """Small fields covering prime, extension and tower cases."""
    return [
        GF(2), GF(3), GF(5), F4(), F8(), F16(), F81(),
        GF(2, 3), GF(3, 2),
        ExtensionField(GF(2, 3), [1, 1, 1]),
        ExtensionField(GF(2, 2), smallest_irreducible(GF(2, 2), 3)),
    ]


def element_at(F, k: int) -> FieldElement:
    """The k-th element in base-|F_p| digit order (lowest coordinate first)."""
    if F.base is None:
        return F(k % F.order)
    digits = []
    b = F.base.order
    for _ in range(F.degree):
        digits.append(element_at(F.base, k % b).raw)
        k //= b
    return FieldElement(F, tuple(digits))


FIELDS = sample_fields()


@st.composite
def field_and_elements(draw, count=3, fields=None, nonzero=False):
    F = draw(st.sampled_from(fields or FIELDS))
    lo = 1 if nonzero else 0
    elems = [element_at(F, draw(st.integers(lo, F.order - 1))) for _ in range(count)]
    return (F, *elems)
