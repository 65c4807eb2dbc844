"""Exact n-gram frequency tables over word-length sequences."""
from typing import Iterable, Mapping, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from sortedcontainers import SortedDict

from ..errors import ContractError, EmptyInputError

Gram = Tuple[int, ...]

# packed codes must stay below 2**63
_PACK_LIMIT = 2 ** 62


def _pack(windows: np.ndarray, base: int) -> np.ndarray:
    codes = np.zeros(windows.shape[0], dtype=np.int64)
    for column in range(windows.shape[1]):
        codes = codes * base + windows[:, column]
    return codes


def _unpack(codes: np.ndarray, base: int, n: int) -> np.ndarray:
    keys = np.empty((codes.size, n), dtype=np.int64)
    for column in range(n - 1, -1, -1):
        keys[:, column] = codes % base
        codes = codes // base
    return keys


class FrequencyTable:
    """Counts of the distinct n-grams of a sequence.

    Keys are kept as rows of an ``(m, n)`` array sorted lexicographically,
    with their counts alongside. ``total`` is the number of grams counted.
    """

    __slots__ = ('n', 'keys', 'counts', 'total', '_entries')

    def __init__(self, n: int, keys: np.ndarray, counts: np.ndarray):
        keys = np.asarray(keys, dtype=np.int64).reshape(-1, n)
        counts = np.asarray(counts, dtype=np.int64)
        if keys.shape[0] != counts.size:
            raise ContractError('one count per key is required')
        if counts.size and int(counts.min()) < 1:
            raise ContractError('counts must be >= 1')
        self.n = n
        self.keys = keys
        self.counts = counts
        self.total = int(counts.sum())
        self._entries = None

    @classmethod
    def from_values(cls, values, n: int) -> 'FrequencyTable':
        """Count the stride-1 windows of length n over values."""
        values = np.asarray(values, dtype=np.int64)
        if n < 1:
            raise ContractError('gram order must be >= 1')
        if n > values.size:
            raise ContractError(
                'gram order {} exceeds sequence length {}'.format(n, values.size)
            )
        windows = sliding_window_view(values, n)
        base = int(values.max()) + 1
        if base ** n < _PACK_LIMIT:
            codes, counts = np.unique(_pack(windows, base), return_counts=True)
            keys = _unpack(codes, base, n)
        else:
            keys, counts = np.unique(windows, axis=0, return_counts=True)
        return cls(n, keys, counts)

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[Gram, int]) -> 'FrequencyTable':
        """Build from a gram -> count mapping."""
        ordered = SortedDict(counts)
        keys = np.array(list(ordered.keys()), dtype=np.int64).reshape(-1, n)
        return cls(n, keys, np.array(list(ordered.values()), dtype=np.int64))

    def __len__(self):
        return int(self.counts.size)

    @property
    def probabilities(self) -> np.ndarray:
        """count / total, in key order."""
        if not self.total:
            raise EmptyInputError('empty frequency table')
        return self.counts / self.total

    def grams(self) -> Iterable[Gram]:
        return (tuple(row) for row in self.keys.tolist())

    @property
    def entries(self) -> SortedDict:
        """Gram -> (count, probability), sorted by gram."""
        if self._entries is None:
            total = self.total
            self._entries = SortedDict(
                (gram, (count, count / total))
                for gram, count in zip(self.grams(), self.counts.tolist())
            )
        return self._entries

    def count(self, gram: Gram) -> int:
        entry = self.entries.get(tuple(gram))
        return entry[0] if entry else 0

    def merge(self, other: 'FrequencyTable') -> 'FrequencyTable':
        """Combine two tables of the same order by summing counts."""
        if other.n != self.n:
            raise ContractError(
                'cannot merge orders {} and {}'.format(self.n, other.n)
            )
        merged = SortedDict()
        for table in (self, other):
            for gram, count in zip(table.grams(), table.counts.tolist()):
                merged[gram] = merged.get(gram, 0) + count
        return FrequencyTable.from_counts(self.n, merged)

    def __eq__(self, other):
        return isinstance(other, FrequencyTable) and self.n == other.n and \
            np.array_equal(self.keys, other.keys) and \
            np.array_equal(self.counts, other.counts)

    def __repr__(self):
        return 'FrequencyTable(n={}, distinct={}, total={})'.format(
            self.n, len(self), self.total
        )
