import pytest

from pg0geo.golden import golden_documents


@pytest.fixture(scope="session")
def golden_docs():
    return golden_documents()


@pytest.fixture(scope="session")
def golden_cfgs(golden_docs):
    return {name: doc.config for name, doc in golden_docs.items()}
