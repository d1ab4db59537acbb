import pytest

from finitetm.compiler import compile_dense, compile_trie
from finitetm.language import FiniteLanguage
from finitetm.verifier import random_language

# Acceptance corpus: language i uses seed i, n = i % 11 and
# size = min(7 * i % 51, 2 ** (n + 1) - 1), so n covers 0..10 and size 0..50.
CORPUS_SIZE = 100


def corpus_params(i):
    n = i % 11
    size = min(7 * i % 51, 2 ** (n + 1) - 1)
    return n, size, i


@pytest.fixture(scope="session")
def corpus():
    langs = []
    for i in range(CORPUS_SIZE):
        n, size, seed = corpus_params(i)
        langs.append(random_language(n, size, seed))
    return langs


@pytest.fixture(scope="session")
def compiled_corpus(corpus):
    return [(lang, compile_dense(lang), compile_trie(lang)) for lang in corpus]


@pytest.fixture
def example_lang():
    return FiniteLanguage.of("1", "01", "110")


@pytest.fixture
def example_dense(example_lang):
    return compile_dense(example_lang)


@pytest.fixture
def example_trie(example_lang):
    return compile_trie(example_lang)


_acceptance_lines = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
