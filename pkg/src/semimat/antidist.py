"""Dense saturated matrices for all-pairs shortest paths.

An :class:`AntidistMatrix` entry is an unsigned lane value a encoding the
distance S - a (S = 2**width - 1): 0 is unreachable, S is distance zero,
larger values mean shorter distances. Addition of matrices takes the lanewise
maximum (shorter distance wins) and the product accumulates, for every pair
(i, j), the best saturated sum over intermediate k, so the closure of an
adjacency matrix holds all-pairs shortest path values clipped at S.

:class:`DistMatrix` is the complement view: entries are plain distances,
S means unreachable, matrix addition is the lanewise minimum and the product
accumulates saturating sums with min. The two classes are exchanged by ``~``
and never mix silently; their raw bytes are identical up to complement.

Rows are padded to a whole number of 128-bit blocks. Padding columns hold
each class's additive identity (0 for anti-distance, S for distance) and are
restored after every operation.

Matrix products and closures dispatch between the numpy vector path and the
pure-Python scalar path exactly like :mod:`semimat.kernels`; the in-place
closure variants need exclusive access to the receiver while they run.
"""

import numpy as np

from . import kernels
from .boolmat import BoolMatrix
from .scalars import sat_limit


class _LaneMatrix:
    """Shared storage and entrywise algebra of the two saturated matrix types."""

    __slots__ = ("rows", "cols", "width", "_data")

    _PAD_IS_LIMIT = False

    def __init__(self, rows: int, cols: int, width: int = 8, _data=None):
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        dtype = kernels.dtype_for(width)
        lanes = kernels.lane_count(width)
        padded = -(-cols // lanes) * lanes
        self.rows = rows
        self.cols = cols
        self.width = width
        if _data is None:
            _data = np.full((rows, padded), self._pad_fill(width), dtype=dtype)
        elif _data.shape != (rows, padded) or _data.dtype != dtype:
            raise ValueError("backing array does not match the padded shape")
        self._data = _data

    @classmethod
    def _pad_fill(cls, width):
        return sat_limit(width) if cls._PAD_IS_LIMIT else 0

    # -- basics ----------------------------------------------------------

    @property
    def limit(self) -> int:
        """Saturation limit S for this width."""
        return sat_limit(self.width)

    @property
    def padded_cols(self) -> int:
        return self._data.shape[1]

    @property
    def data(self):
        """Raw lane storage including padding columns, as a read-only view."""
        view = self._data.view()
        view.flags.writeable = False
        return view

    def copy(self):
        return type(self)(self.rows, self.cols, self.width, self._data.copy())

    def _check_index(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols}")

    def get(self, i: int, j: int) -> int:
        self._check_index(i, j)
        return int(self._data[i, j])

    def set(self, i: int, j: int, value: int) -> None:
        self._check_index(i, j)
        if not 0 <= value <= self.limit:
            raise ValueError(f"entry {value!r} outside [0, {self.limit}]")
        self._data[i, j] = value

    def to_lists(self) -> list[list[int]]:
        return self._data[:, : self.cols].tolist()

    @classmethod
    def from_lists(cls, rows: list[list[int]], width: int = 8):
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        ncols = len(rows[0])
        m = cls(len(rows), ncols, width)
        limit = m.limit
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
            for v in row:
                if not 0 <= v <= limit:
                    raise ValueError(f"entry {v!r} outside [0, {limit}]")
            m._data[i, :ncols] = row
        return m

    def _fix_padding(self):
        if self.padded_cols != self.cols:
            self._data[:, self.cols:] = self._pad_fill(self.width)

    # -- entrywise algebra -------------------------------------------------

    def _check_same(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"expected {type(self).__name__}, got {type(other).__name__}"
            )
        if (self.rows, self.cols, self.width) != (other.rows, other.cols, other.width):
            raise ValueError(
                f"shape/width mismatch: {self.rows}x{self.cols}/w{self.width} vs "
                f"{other.rows}x{other.cols}/w{other.width}"
            )

    def _entrywise(self, other, np_op, kernel_op):
        self._check_same(other)
        if kernels.use_vector():
            data = np_op(self._data, other._data)
        else:
            flat = kernel_op(self._data.reshape(-1), other._data.reshape(-1), self.width)
            data = np.array(flat, dtype=self._data.dtype).reshape(self._data.shape)
        out = type(self)(self.rows, self.cols, self.width, data)
        out._fix_padding()
        return out

    def __and__(self, other):
        """Lanewise minimum."""
        return self._entrywise(other, np.minimum, kernels.minlanes)

    def __or__(self, other):
        """Lanewise maximum."""
        return self._entrywise(other, np.maximum, kernels.maxlanes)

    def __xor__(self, other):
        """Lanewise absolute difference."""
        return self._entrywise(other, kernels.np_absdiff, kernels.absdiff)

    def __invert__(self):
        """Complement at width, switching between the two encodings."""
        cls = DistMatrix if isinstance(self, AntidistMatrix) else AntidistMatrix
        out = cls(self.rows, self.cols, self.width, self.limit - self._data)
        out._fix_padding()
        return out

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            (self.rows, self.cols, self.width)
            == (other.rows, other.cols, other.width)
            and np.array_equal(self._data, other._data)
        )

    __hash__ = None

    def __repr__(self):
        return f"<{type(self).__name__} {self.rows}x{self.cols} width={self.width}>"


class AntidistMatrix(_LaneMatrix):
    """Matrix of anti-distance values; see the module docstring."""

    _PAD_IS_LIMIT = False

    @classmethod
    def zeros(cls, rows: int, cols: int, width: int = 8) -> "AntidistMatrix":
        """All-unreachable matrix (the empty graph), neutral for ``|``."""
        return cls(rows, cols, width)

    @classmethod
    def identity(cls, dim: int, width: int = 8) -> "AntidistMatrix":
        """Distance zero on the diagonal, unreachable elsewhere; neutral for ``*``."""
        m = cls(dim, dim, width)
        idx = np.arange(dim)
        m._data[idx, idx] = m.limit
        return m

    @classmethod
    def from_edges(cls, dim: int, edges, width: int = 8) -> "AntidistMatrix":
        """Adjacency matrix of weighted directed edges (u, v, w).

        Weights must lie in [0, S]. Parallel edges keep the shortest
        distance, i.e. the largest encoded value.
        """
        m = cls(dim, dim, width)
        limit = m.limit
        data = m._data
        for u, v, w in edges:
            if not 0 <= u < dim:
                raise ValueError(f"source vertex {u} out of range [0, {dim})")
            if not 0 <= v < dim:
                raise ValueError(f"target vertex {v} out of range [0, {dim})")
            if not 0 <= w <= limit:
                raise ValueError(f"weight {w} outside [0, {limit}]")
            value = limit - w
            if value > int(data[u, v]):
                data[u, v] = value
        return m

    @classmethod
    def from_boolmat(cls, mat: BoolMatrix, width: int = 8) -> "AntidistMatrix":
        """Lift a Boolean matrix: 1 becomes distance zero (value S), 0 stays 0."""
        m = cls(mat.rows, mat.cols, width)
        bits = np.asarray(mat.to_lists(), dtype=m._data.dtype)
        m._data[:, : m.cols] = bits * m.limit
        return m

    def to_boolmat(self) -> BoolMatrix:
        """Reachability structure: any finite distance becomes 1."""
        bits = (self._data[:, : self.cols] > 0).astype(int)
        return BoolMatrix.from_lists(bits.tolist())

    def __mul__(self, other) -> "AntidistMatrix":
        """Semiring product: entry (i, j) is the best saturated sum over k.

        Outer-product form: for every k, each output row i with left entry
        e = (i, k) > 0 accumulates max(current, row k of other minus (S - e),
        clipped at zero). Zero left entries are skipped, exact because 0
        absorbs multiplication and is neutral for max.
        """
        if not isinstance(other, AntidistMatrix):
            return NotImplemented
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")
        if self.cols != other.rows:
            raise ValueError(
                f"inner dimensions disagree: {self.rows}x{self.cols} times "
                f"{other.rows}x{other.cols}"
            )
        if kernels.use_vector():
            data = _mul_vector(self._data, other._data, self.cols, self.limit)
        else:
            work = _mul_scalar(
                self._data.tolist(), other._data.tolist(), self.cols, self.limit
            )
            data = np.array(work, dtype=self._data.dtype)
        return AntidistMatrix(self.rows, other.cols, self.width, data)

    def transitive_close(self) -> None:
        """In-place variant of :meth:`transitive_closure`."""
        if self.rows != self.cols:
            raise ValueError(f"closure needs a square matrix, got {self.rows}x{self.cols}")
        if kernels.use_vector():
            _close_vector(self._data, self.rows, self.limit)
        else:
            work = self._data.tolist()
            _close_scalar(work, self.rows, self.limit)
            self._data[...] = np.array(work, dtype=self._data.dtype)

    def transitive_closure(self) -> "AntidistMatrix":
        """Best saturated path value for every ordered pair (>= 1 edge).

        Entry (i, j) becomes S - min(d(i, j), S) for the shortest-path
        distance d; the diagonal reports the shortest cycle through each
        vertex, 0 if none exists within S. Same in-place sweep as the
        Boolean closure, with updated rows feeding later steps.
        """
        out = self.copy()
        out.transitive_close()
        return out


class DistMatrix(_LaneMatrix):
    """Matrix of plain distances; the complement view of AntidistMatrix."""

    _PAD_IS_LIMIT = True

    @classmethod
    def unreachable(cls, rows: int, cols: int, width: int = 8) -> "DistMatrix":
        """All-S matrix (no connections), neutral for ``&``."""
        return cls(rows, cols, width)

    @classmethod
    def identity(cls, dim: int, width: int = 8) -> "DistMatrix":
        """Zero on the diagonal, S elsewhere; neutral for the min-plus product."""
        m = cls(dim, dim, width)
        idx = np.arange(dim)
        m._data[idx, idx] = 0
        return m

    @classmethod
    def from_edges(cls, dim: int, edges, width: int = 8) -> "DistMatrix":
        """Adjacency matrix storing edge weights directly; parallel edges keep the minimum."""
        m = cls(dim, dim, width)
        limit = m.limit
        data = m._data
        for u, v, w in edges:
            if not 0 <= u < dim:
                raise ValueError(f"source vertex {u} out of range [0, {dim})")
            if not 0 <= v < dim:
                raise ValueError(f"target vertex {v} out of range [0, {dim})")
            if not 0 <= w <= limit:
                raise ValueError(f"weight {w} outside [0, {limit}]")
            if w < int(data[u, v]):
                data[u, v] = w
        return m

    def __mul__(self, other) -> "DistMatrix":
        """Min-plus product: entry (i, j) is min over k of the saturating sum."""
        if not isinstance(other, DistMatrix):
            return NotImplemented
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")
        if self.cols != other.rows:
            raise ValueError(
                f"inner dimensions disagree: {self.rows}x{self.cols} times "
                f"{other.rows}x{other.cols}"
            )
        if kernels.use_vector():
            data = _minplus_mul_vector(self._data, other._data, self.cols, self.limit)
        else:
            work = _minplus_mul_scalar(
                self._data.tolist(), other._data.tolist(), self.cols, self.limit
            )
            data = np.array(work, dtype=self._data.dtype)
        return DistMatrix(self.rows, other.cols, self.width, data)

    def transitive_close(self) -> None:
        """In-place variant of :meth:`transitive_closure`."""
        if self.rows != self.cols:
            raise ValueError(f"closure needs a square matrix, got {self.rows}x{self.cols}")
        if kernels.use_vector():
            _minplus_close_vector(self._data, self.rows, self.limit)
        else:
            work = self._data.tolist()
            _minplus_close_scalar(work, self.rows, self.limit)
            self._data[...] = np.array(work, dtype=self._data.dtype)

    def transitive_closure(self) -> "DistMatrix":
        """Min-plus closure: shortest distances over >= 1 edge, clipped at S.

        The diagonal holds the minimum cycle length through each vertex,
        S when there is none.
        """
        out = self.copy()
        out.transitive_close()
        return out


# -- compute engines ---------------------------------------------------------
#
# Each operation has a vector form (numpy, whole padded rows at a time) and a
# scalar form (per-lane Python arithmetic on plain lists). Both follow the
# same outer-product sweep and must stay bit-identical; the benchmark checks
# that on every run.


def _mul_vector(a, b, inner, limit):
    out = np.zeros((a.shape[0], b.shape[1]), dtype=a.dtype)
    for k in range(inner):
        column = a[:, k]
        hit = np.nonzero(column)[0]
        if hit.size:
            gap = (limit - column[hit])[:, None]
            cand = kernels.np_subsat(b[k][None, :], gap)
            np.maximum(out[hit], cand, out=cand)
            out[hit] = cand
    return out


def _mul_scalar(a, b, inner, limit):
    width_cols = len(b[0])
    out = [[0] * width_cols for _ in range(len(a))]
    for k in range(inner):
        row_k = b[k]
        for r, row_a in enumerate(a):
            e = row_a[k]
            if e:
                gap = limit - e
                row_out = out[r]
                row_out[:] = [
                    v if (v := x - gap) > p else p for x, p in zip(row_k, row_out)
                ]
    return out


def _close_vector(t, dim, limit):
    for k in range(dim):
        column = t[:, k]
        hit = np.nonzero(column)[0]
        if hit.size:
            gap = (limit - column[hit])[:, None]
            cand = kernels.np_subsat(t[k][None, :], gap)
            np.maximum(t[hit], cand, out=cand)
            t[hit] = cand


def _close_scalar(t, dim, limit):
    for k in range(dim):
        row_k = t[k]
        for r in range(dim):
            e = t[r][k]
            if e:
                gap = limit - e
                row = t[r]
                row[:] = [v if (v := x - gap) > p else p for x, p in zip(row_k, row)]


def _minplus_mul_vector(a, b, inner, limit):
    out = np.full((a.shape[0], b.shape[1]), limit, dtype=a.dtype)
    for k in range(inner):
        column = a[:, k]
        hit = np.nonzero(column != limit)[0]
        if hit.size:
            e = column[hit][:, None]
            cand = kernels.np_addsat(b[k][None, :], e, limit)
            np.minimum(out[hit], cand, out=cand)
            out[hit] = cand
    return out


def _minplus_mul_scalar(a, b, inner, limit):
    width_cols = len(b[0])
    out = [[limit] * width_cols for _ in range(len(a))]
    for k in range(inner):
        row_k = b[k]
        for r, row_a in enumerate(a):
            e = row_a[k]
            if e != limit:
                row_out = out[r]
                row_out[:] = [
                    v if (v := x + e) < p else p for x, p in zip(row_k, row_out)
                ]
    return out


def _minplus_close_vector(t, dim, limit):
    for k in range(dim):
        column = t[:, k]
        hit = np.nonzero(column != limit)[0]
        if hit.size:
            e = column[hit][:, None]
            cand = kernels.np_addsat(t[k][None, :], e, limit)
            np.minimum(t[hit], cand, out=cand)
            t[hit] = cand


def _minplus_close_scalar(t, dim, limit):
    for k in range(dim):
        row_k = t[k]
        for r in range(dim):
            e = t[r][k]
            if e != limit:
                row = t[r]
                row[:] = [v if (v := x + e) < p else p for x, p in zip(row_k, row)]
