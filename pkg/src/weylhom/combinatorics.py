"""Partitions, weights, tableau/matrix enumeration and combinatorial predicates.

A tableau with weakly increasing rows is stored as a square nonnegative
integer matrix A = (a_ij), where a_ij counts the occurrences of the letter j
in row i.  Row sums give the shape, column sums give the weight (content).
"""

from .errors import InvalidInputError


class Partition:
    """Weakly decreasing sequence of nonnegative integers, trailing zeros stripped."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(x) for x in parts)
        for x in parts:
            if x < 0:
                raise InvalidInputError("partition parts must be nonnegative: %r" % (parts,))
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidInputError("partition parts must be weakly decreasing: %r" % (parts,))
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError as exc:
            raise InvalidInputError("cannot parse partition %r" % text) from exc

    @property
    def length(self):
        return len(self.parts)

    @property
    def size(self):
        return sum(self.parts)

    def part(self, i):
        """1-based part access; 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n):
        if n < len(self.parts):
            raise InvalidInputError("cannot pad partition of length %d to %d" % (len(self.parts), n))
        return self.parts + (0,) * (n - len(self.parts))

    def add(self, other):
        n = max(self.length, other.length)
        return Partition(a + b for a, b in zip(self.padded(n), other.padded(n)))

    def scale(self, k):
        return Partition(k * x for x in self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)

    def __str__(self):
        return ",".join(str(x) for x in self.parts)


class Weight:
    """Sequence of exactly n nonnegative integers (a point of Lambda(n,r))."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(int(x) for x in entries)
        for x in entries:
            if x < 0:
                raise InvalidInputError("weight entries must be nonnegative: %r" % (entries,))
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @classmethod
    def parse(cls, text):
        try:
            return cls(int(x) for x in text.strip().split(","))
        except ValueError as exc:
            raise InvalidInputError("cannot parse weight %r" % text) from exc

    @property
    def n(self):
        return len(self.entries)

    @property
    def size(self):
        return sum(self.entries)

    def padded(self, n):
        if n < len(self.entries):
            if any(self.entries[n:]):
                raise InvalidInputError("cannot truncate weight with nonzero tail")
            return self.entries[:n]
        return self.entries + (0,) * (n - len(self.entries))

    def __eq__(self, other):
        return isinstance(other, Weight) and self.entries == other.entries

    def __hash__(self):
        return hash(("Weight", self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return "Weight(%r)" % (self.entries,)

    def __str__(self):
        return ",".join(str(x) for x in self.entries)


class Tableau:
    """n x n nonnegative integer matrix; rows encode 1^(a_i1)...n^(a_in)."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(matrix)
        for row in matrix:
            if len(row) != n:
                raise InvalidInputError("tableau matrix must be square")
            for x in row:
                if x < 0:
                    raise InvalidInputError("tableau entries must be nonnegative")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @classmethod
    def parse(cls, text, n=None):
        """Parse "4,1,0,1;0,2,0,2"; pads with zero rows up to n (default: #columns)."""
        try:
            rows = [[int(x) for x in part.split(",")] for part in text.strip().split(";")]
        except ValueError as exc:
            raise InvalidInputError("cannot parse tableau %r" % text) from exc
        width = max(len(r) for r in rows)
        if n is None:
            n = max(width, len(rows))
        if width > n or len(rows) > n:
            raise InvalidInputError("tableau %r does not fit in rank %d" % (text, n))
        full = [list(r) + [0] * (n - len(r)) for r in rows]
        full += [[0] * n for _ in range(n - len(rows))]
        return cls(full)

    @property
    def n(self):
        return len(self.matrix)

    @property
    def row_sums(self):
        return tuple(sum(row) for row in self.matrix)

    @property
    def col_sums(self):
        return tuple(sum(col) for col in zip(*self.matrix))

    def expanded_rows(self):
        """Rows as explicit weakly increasing letter sequences (letters 1-based)."""
        out = []
        for row in self.matrix:
            word = []
            for j, c in enumerate(row):
                word.extend([j + 1] * c)
            out.append(word)
        return out

    def is_semistandard(self):
        """Strictly increasing columns, checked on the expanded filling."""
        rows = self.expanded_rows()
        for i in range(len(rows) - 1):
            upper, lower = rows[i], rows[i + 1]
            if len(lower) > len(upper):
                return False
            for c, x in enumerate(lower):
                if x <= upper[c]:
                    return False
        return True

    def to_string(self):
        """Serialize, dropping trailing all-zero rows (but keeping at least one)."""
        rows = list(self.matrix)
        while len(rows) > 1 and not any(rows[-1]):
            rows.pop()
        return ";".join(",".join(str(x) for x in row) for row in rows)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.matrix == other.matrix

    def __lt__(self, other):
        return self.matrix < other.matrix

    def __hash__(self):
        return hash(("Tableau", self.matrix))

    def __repr__(self):
        return "Tableau(%r)" % (self.matrix,)


def conjugate(mu):
    """Conjugate (transposed) partition."""
    parts = mu.parts
    if not parts:
        return Partition(())
    return Partition(sum(1 for x in parts if x > j) for j in range(parts[0]))


def dominates(lam, mu):
    """True iff lam is dominated by mu: every partial sum of lam is <= that of mu."""
    if lam.size != mu.size:
        raise InvalidInputError("dominance needs equal sizes: |%s| != |%s|" % (lam, mu))
    n = max(lam.length, mu.length)
    a = lam.padded(n)
    b = mu.padded(n)
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def _enumerate_matrices(row_sums, col_sums, n, upper_triangular_only, semistandard_only):
    """Backtracking enumeration of n x n matrices with the given row/column sums.

    Rows are filled top to bottom, cells left to right, smallest entry first, so
    the output is sorted in row-major lexicographic order.  With
    semistandard_only the adjacent-row prefix condition
      sum_{j<=c} a_{i+1,j} <= sum_{j<=c-1} a_{i,j}
    prunes to exactly the column-strict tableaux.
    """
    results = []
    colrem = list(col_sums)
    mat = [[0] * n for _ in range(n)]

    def fill_row(i):
        if i == n:
            results.append(tuple(tuple(row) for row in mat))
            return
        need = row_sums[i]
        row = mat[i]

        def fill_cell(j, rem):
            if j == n:
                if rem == 0:
                    fill_row(i + 1)
                return
            lo = 0
            hi = min(rem, colrem[j])
            if upper_triangular_only and j < i:
                hi = 0
            if semistandard_only and i > 0:
                # prefix of row i through column j must fit under row i-1 through j-1
                above = sum(mat[i - 1][:j])
                placed = sum(row[:j])
                hi = min(hi, above - placed)
            # remaining columns must be able to absorb the leftover
            tail = sum(min(rem, colrem[k]) for k in range(j + 1, n))
            lo = max(lo, rem - tail)
            if lo > hi:
                return
            for v in range(lo, hi + 1):
                row[j] = v
                colrem[j] -= v
                fill_cell(j + 1, rem - v)
                row[j] = 0
                colrem[j] += v

        fill_cell(0, need)

    fill_row(0)
    return results


def enumerate_rsst(mu, alpha, upper_triangular_only=False):
    """All row-semistandard tableaux of shape mu and weight alpha, sorted.

    Returned as Tableau objects over rank n = len(alpha), row-major lex order.
    """
    n = alpha.n
    if mu.size != alpha.size:
        raise InvalidInputError("shape/weight size mismatch: |%s| != |%s|" % (mu, alpha))
    if mu.length > n:
        return []
    rows = mu.padded(n)
    mats = _enumerate_matrices(rows, alpha.entries, n, upper_triangular_only, False)
    return [Tableau(m) for m in mats]


def enumerate_sst(mu, alpha):
    """All semistandard tableaux of shape mu and weight alpha, sorted."""
    n = alpha.n
    if mu.size != alpha.size:
        raise InvalidInputError("shape/weight size mismatch: |%s| != |%s|" % (mu, alpha))
    if mu.length > n:
        return []
    rows = mu.padded(n)
    mats = _enumerate_matrices(rows, alpha.entries, n, False, True)
    return [Tableau(m) for m in mats]


def kostka(mu, alpha):
    """|SST_alpha(mu)|."""
    return len(enumerate_sst(mu, alpha))


def in_P(alpha, mu):
    """Membership in P(mu): partial sums of alpha dominate those of mu with one part omitted."""
    if alpha.size != mu.size:
        raise InvalidInputError("size mismatch: |%s| != |%s|" % (alpha, mu))
    m = mu.length
    if m <= 1:
        return True
    psum_mu = 0
    psum_a = 0
    for i in range(2, m + 1):
        # sum_{j<=i} mu_j - mu_{i-1} <= sum_{j<=i-1} alpha_j
        psum_a += alpha.entries[i - 2] if i - 2 < alpha.n else 0
        psum_mu = sum(mu.parts[:i])
        if psum_mu - mu.parts[i - 2] > psum_a:
            return False
    return True


def in_lambda_g(mu, g):
    """Membership in Lambda^+(n)_g: mu_{j-1} <= mu_j + mu_{j+1} for j = 2..g."""
    if g < 1:
        raise InvalidInputError("g must be >= 1")
    for j in range(2, g + 1):
        if mu.part(j - 1) > mu.part(j) + mu.part(j + 1):
            return False
    return True


def shift_tableau(T, gamma):
    """Insert gamma_i copies of letter i at the front of row i (adds to the diagonal)."""
    try:
        mu = Partition(T.row_sums)
    except InvalidInputError:
        raise InvalidInputError("tableau rows are not a partition shape")
    if not T.is_semistandard():
        raise InvalidInputError("shift_tableau requires a semistandard tableau")
    alpha = Weight(T.col_sums)
    if not in_P(alpha, mu):
        raise InvalidInputError("weight %s is not in P(%s)" % (alpha, mu))
    if gamma.length >= mu.length and gamma.size > 0:
        raise InvalidInputError("need len(gamma) < len(mu)")
    mat = [list(row) for row in T.matrix]
    for i, g in enumerate(gamma.parts):
        mat[i][i] += g
    return Tableau(mat)
