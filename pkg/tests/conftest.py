import pytest

from cechkit.diagrams import canonicalize
from cechkit.documents import parse_document
from cechkit.gallery import gallery_document

GALLERY_CASES = [
    ("two_origin_line", {}),
    ("branching_line_n", {"n": 2}),
    ("branching_line_n", {"n": 3}),
    ("bug_eyed_circle", {}),
    ("three_circles", {}),
]


def diagram_for(name, **kwargs):
    return canonicalize(parse_document(gallery_document(name, **kwargs)).system)


@pytest.fixture(scope="session")
def two_origin():
    return diagram_for("two_origin_line")


@pytest.fixture(scope="session")
def branching():
    return diagram_for("branching_line_n", n=2)


@pytest.fixture(scope="session")
def bug_eyed():
    return diagram_for("bug_eyed_circle")


@pytest.fixture(scope="session")
def three_circles():
    return diagram_for("three_circles")


@pytest.fixture(scope="session", params=GALLERY_CASES, ids=lambda c: f"{c[0]}{c[1] or ''}")
def gallery_diagram(request):
    name, kwargs = request.param
    return diagram_for(name, **kwargs)
