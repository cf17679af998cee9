import pathlib

import pytest

from loosegeo import formats

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def corpus_graph(name):
    return formats.load_graph(str(CORPUS / f"{name}.lg"))


@pytest.fixture
def corpus_dir():
    return CORPUS
