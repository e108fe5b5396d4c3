"""Exact dense linear algebra over an abstract coefficient field.

Vectors are Python lists of field elements.  Everything is Gaussian
elimination; sizes stay at desk scale so no sparsity tricks are needed.
"""


class Span:
    """A growing row space kept in reduced echelon form.

    Supports membership tests, incremental insertion, and expressing a
    vector in terms of the inserted generators (when tracking is on).
    """

    def __init__(self, field, width, track=False):
        self.field = field
        self.width = width
        self.track = track
        self.rows = []        # echelon rows
        self.pivots = []      # pivot column of rows[i]
        self.history = []     # combination of inserted vectors giving rows[i]
        self.n_inserted = 0

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec, comb=None):
        F = self.field
        vec = list(vec)
        for row, piv, hist in zip(self.rows, self.pivots, self.history):
            c = vec[piv]
            if not F.is_zero(c):
                for j in range(piv, self.width):
                    vec[j] = F.sub(vec[j], F.mul(c, row[j]))
                if comb is not None:
                    for k, h in hist.items():
                        comb[k] = F.sub(comb.get(k, F.zero), F.mul(c, h))
        return vec

    def contains(self, vec):
        red = self._reduce(vec)
        F = self.field
        return all(F.is_zero(c) for c in red)

    def coordinates(self, vec):
        """Express vec over the inserted generators, or None if outside.

        Returns a dict {insertion index: coefficient}.  Requires track=True.
        """
        if not self.track:
            raise ValueError("span built without tracking")
        F = self.field
        comb = {}
        red = self._reduce(vec, comb)
        if any(not F.is_zero(c) for c in red):
            return None
        return {k: F.neg(v) for k, v in comb.items() if not F.is_zero(v)}

    def add(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        F = self.field
        comb = {self.n_inserted: F.one} if self.track else None
        self.n_inserted += 1
        red = self._reduce(vec, comb)
        piv = None
        for j in range(self.width):
            if not F.is_zero(red[j]):
                piv = j
                break
        if piv is None:
            return False
        c = F.inv(red[piv])
        red = [F.mul(c, x) for x in red]
        if comb is not None:
            comb = {k: F.mul(c, v) for k, v in comb.items()}
        # Back-substitute into existing rows to stay fully reduced.
        for i, (row, p) in enumerate(zip(self.rows, self.pivots)):
            d = row[piv]
            if not F.is_zero(d):
                self.rows[i] = [F.sub(a, F.mul(d, b)) for a, b in zip(row, red)]
                if self.track:
                    h = dict(self.history[i])
                    for k, v in comb.items():
                        h[k] = F.sub(h.get(k, F.zero), F.mul(d, v))
                    self.history[i] = h
        self.rows.append(red)
        self.pivots.append(piv)
        self.history.append(comb if self.track else None)
        return True


def rank(field, rows):
    sp = Span(field, len(rows[0]) if rows else 0)
    for r in rows:
        sp.add(r)
    return sp.rank


def nullspace(field, rows, width):
    """Basis of {v : A v = 0} for the matrix with the given rows.

    Returns a list of length-``width`` vectors.
    """
    F = field
    sp = Span(F, width)
    for r in rows:
        sp.add(r)
    # Column echelon data: pivot columns of the row space.
    pivot_cols = set(sp.pivots)
    free_cols = [j for j in range(width) if j not in pivot_cols]
    basis = []
    for j in free_cols:
        v = [F.zero] * width
        v[j] = F.one
        for row, piv in zip(sp.rows, sp.pivots):
            # row has 1 at piv; v must cancel row . v at the pivot coordinate
            v[piv] = F.neg(row[j])
        basis.append(v)
    return basis


def solve(field, columns, target, width):
    """Solve sum_i x_i columns[i] = target; None if inconsistent.

    ``columns`` is a list of length-``width`` vectors.
    """
    sp = Span(field, width, track=True)
    for c in columns:
        sp.add(c)
    coords = sp.coordinates(target)
    if coords is None:
        return None
    out = [field.zero] * len(columns)
    for k, v in coords.items():
        out[k] = v
    return out
