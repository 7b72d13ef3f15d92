import pytest

from sylowtab.corpus import build_group, corpus_entries, corpus_entry
from sylowtab.dixon import dixon_table


class CorpusCache:
    """Session-wide cache of enumerated groups, tables and ground truths
    (enumeration and the Dixon run dominate test runtime)."""

    def __init__(self):
        self._groups = {}
        self._tables = {}
        self._truths = {}

    def names(self):
        return [e.name for e in corpus_entries()]

    def entry(self, name):
        return corpus_entry(name)

    def group(self, name):
        if name not in self._groups:
            self._groups[name] = build_group(corpus_entry(name))
        return self._groups[name]

    def table(self, name):
        if name not in self._tables:
            self._tables[name] = dixon_table(self.group(name))
        return self._tables[name]

    def truth(self, name, p):
        if (name, p) not in self._truths:
            self._truths[name, p] = self.group(name).ground_truth(p)
        return self._truths[name, p]

    def pairs(self):
        for e in corpus_entries():
            for p in e.primes():
                yield e.name, p


@pytest.fixture(scope="session")
def corpus():
    return CorpusCache()
