"""Graded free modules, degree-compatible matrices, and module presentations.

Twist lists (a_1, ..., a_r) denote direct sums of S(-a_i) (or R(-a_i)
over a quotient).  A module is the cokernel of a homogeneous matrix;
entry (i, j) is zero or homogeneous of degree source[j] - target[i].
Graded pieces are exact finite linear algebra over the coefficient
field, with normal forms against the relation ideal when working over a
quotient ring.
"""

from .errors import StructuralError
from .linalg import Span
from .modgb import syzygies_vectors, vec_degree
from .poly import Polynomial
from .rings import RingPresentation


class GradedFreeModule:
    """A twist list; rank is its length and the zero module is empty."""

    def __init__(self, twists):
        self.twists = tuple(int(a) for a in twists)

    @property
    def rank(self):
        return len(self.twists)

    def __repr__(self):
        return f"GradedFreeModule{self.twists}"

    def __eq__(self, other):
        return isinstance(other, GradedFreeModule) and other.twists == self.twists

    def __hash__(self):
        return hash(self.twists)


class GradedMatrix:
    """Homogeneous matrix between graded free modules over one ring."""

    def __init__(self, ring, target, source, entries, check=True):
        self.ring = ring
        self.target = tuple(target)
        self.source = tuple(source)
        self.entries = tuple(tuple(row) for row in entries)
        if check:
            self._validate()

    def _validate(self):
        if len(self.entries) != len(self.target):
            raise StructuralError("row count does not match target rank")
        for row in self.entries:
            if len(row) != len(self.source):
                raise StructuralError("column count does not match source rank")
        for i, a in enumerate(self.target):
            for j, b in enumerate(self.source):
                f = self.entries[i][j]
                if f.is_zero():
                    continue
                if not f.is_homogeneous() or f.degree() != b - a:
                    raise StructuralError(
                        f"entry ({i},{j}) is not homogeneous of degree {b - a}"
                    )

    @property
    def rows(self):
        return len(self.target)

    @property
    def cols(self):
        return len(self.source)

    def column_vector(self, j):
        vec = {}
        for i in range(self.rows):
            f = self.entries[i][j]
            for m, c in f.terms.items():
                vec[(i, m)] = c
        return vec

    def column_vectors(self):
        return [self.column_vector(j) for j in range(self.cols)]

    def transpose_entries(self):
        return [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]

    def compose(self, other):
        """self . other, when other's target equals self's source."""
        if other.ring != self.ring or other.target != self.source:
            raise StructuralError("matrices do not compose")
        amb = self.ring.ambient
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = amb.zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.ring, self.target, other.source, out)

    def is_zero(self):
        return all(f.is_zero() for row in self.entries for f in row)

    def is_zero_mod_relations(self):
        ring = self.ring
        return all(ring.is_zero_in_quotient(f) for row in self.entries for f in row)

    def __repr__(self):
        return f"GradedMatrix({self.rows}x{self.cols}, target={self.target}, source={self.source})"


def matrix_from_vectors(ring, target, vectors, source=None):
    """Assemble column vectors (engine dicts) into a graded matrix."""
    amb = ring.ambient
    if source is None:
        source = []
        for v in vectors:
            d = vec_degree(v, target)
            source.append(0 if d is None else d)
    entries = []
    for i in range(len(target)):
        row = []
        for v in vectors:
            terms = {m: c for (pos, m), c in v.items() if pos == i}
            row.append(Polynomial(amb, terms))
        entries.append(row)
    return GradedMatrix(ring, target, tuple(source), entries)


class ModulePresentation:
    """A finitely generated graded module as a matrix cokernel."""

    def __init__(self, ring, matrix):
        if matrix.ring != ring:
            raise StructuralError("matrix over a different ring")
        self.ring = ring
        self.matrix = matrix
        self._pieces = {}
        self._resolution = None

    @property
    def generator_degrees(self):
        return self.matrix.target

    def is_zero(self):
        return not self.matrix.target

    def begin(self):
        """Least degree with a nonzero piece; +inf for the zero module.

        Valid on minimal presentations, where it is the least generator
        degree.
        """
        from .poly import POS_INF

        if self.is_zero():
            return POS_INF
        return min(self.matrix.target)

    def twist(self, s):
        """The same module with all degrees shifted down by s: M(s)."""
        m = self.matrix
        shifted = GradedMatrix(
            self.ring,
            tuple(a - s for a in m.target),
            tuple(b - s for b in m.source),
            m.entries,
            check=False,
        )
        return ModulePresentation(self.ring, shifted)

    def piece(self, degree):
        if degree not in self._pieces:
            self._pieces[degree] = GradedPiece(self, degree)
        return self._pieces[degree]

    def __repr__(self):
        return (
            f"ModulePresentation(gens={self.matrix.target}, "
            f"rels={self.matrix.source} over {self.ring})"
        )


def free_module(ring, twists):
    """The free module as a presentation with no relations."""
    amb = ring.ambient
    entries = [[] for _ in twists]
    return ModulePresentation(ring, GradedMatrix(ring, tuple(twists), (), entries))


def quotient_module(ring, ideal_gens):
    """R/(gens) as a cyclic module presentation over the ring."""
    amb = ring.ambient
    cols = [f for f in ideal_gens if not f.is_zero()]
    entries = [[f for f in cols]]
    return ModulePresentation(
        ring, GradedMatrix(ring, (0,), tuple(f.degree() for f in cols), entries)
    )


def free_piece_basis(ring, twists, degree):
    """Basis (component, monomial) of the degree piece of a free module."""
    basis = []
    for i, a in enumerate(twists):
        for m in ring.standard_monomials(degree - a):
            basis.append((i, m))
    return basis


def vec_reduce_components(ring, vec):
    """Normal form of each polynomial component modulo the relations."""
    if ring.is_polynomial_ring:
        return dict(vec)
    amb = ring.ambient
    by_pos = {}
    for (pos, m), c in vec.items():
        by_pos.setdefault(pos, {})[m] = c
    out = {}
    for pos, terms in by_pos.items():
        f = ring.nf(Polynomial(amb, terms))
        for m, c in f.terms.items():
            out[(pos, m)] = c
    return out


def vec_coords(vec, index, field):
    v = [field.zero] * len(index)
    for t, c in vec.items():
        v[index[t]] = c
    return v


class GradedPiece:
    """The degree piece of a presented module, as explicit linear algebra.

    Ambient basis: (component, standard monomial) pairs.  The relation
    span is generated by monomial multiples of the presentation columns,
    reduced modulo the ring relations.
    """

    def __init__(self, module, degree):
        self.module = module
        self.degree = degree
        ring = module.ring
        F = ring.field
        mat = module.matrix
        self.basis = free_piece_basis(ring, mat.target, degree)
        self.index = {t: k for k, t in enumerate(self.basis)}
        self.span = Span(F, len(self.basis))
        for j in range(mat.cols):
            d = mat.source[j]
            col = mat.column_vector(j)
            for m in ring.standard_monomials(degree - d):
                shifted = {(pos, mm): c for (pos, mm), c in col.items()}
                moved = {}
                for (pos, mm), c in shifted.items():
                    key = (pos, tuple(x + y for x, y in zip(mm, m)))
                    moved[key] = F.add(moved.get(key, F.zero), c)
                red = vec_reduce_components(ring, moved)
                self.span.add(vec_coords(red, self.index, F))
        self.free_positions = [
            k for k in range(len(self.basis)) if k not in set(self.span.pivots)
        ]

    @property
    def dim(self):
        return len(self.free_positions)

    def project(self, vec):
        """Coordinates of an ambient vector in the quotient basis."""
        ring = self.module.ring
        F = ring.field
        red = vec_reduce_components(ring, vec)
        coords = self.span._reduce(vec_coords(red, self.index, F))
        return [coords[k] for k in self.free_positions]

    def representative(self, k):
        """Ambient vector representing the k-th quotient basis element."""
        i, m = self.basis[self.free_positions[k]]
        return {(i, m): self.module.ring.field.one}

    def multiplication_matrix(self, f):
        """Columns: images of the quotient basis under multiplication by f.

        Returns a list of coordinate columns in the piece of degree
        (this degree + deg f).
        """
        target = self.module.piece(self.degree + f.degree())
        cols = []
        F = self.module.ring.field
        for k in range(self.dim):
            i, m = self.basis[self.free_positions[k]]
            vec = {}
            for mm, c in f.terms.items():
                key = (i, tuple(x + y for x, y in zip(mm, m)))
                vec[key] = F.add(vec.get(key, F.zero), c)
            cols.append(target.project(vec))
        return cols


def module_hilbert(module, degree):
    return module.piece(degree).dim


def s_presentation(module):
    """Fold the ring relations into the matrix: the same module over S."""
    ring = module.ring
    if ring.is_polynomial_ring:
        return module
    amb = ring.ambient
    base = RingPresentation(amb, ())
    mat = module.matrix
    cols = [[mat.entries[i][j] for i in range(mat.rows)] for j in range(mat.cols)]
    source = list(mat.source)
    for rel in ring.relations:
        for i in range(mat.rows):
            col = [amb.zero] * mat.rows
            col[i] = rel
            cols.append(col)
            source.append(rel.degree() + mat.target[i])
    entries = [[cols[j][i] for j in range(len(cols))] for i in range(mat.rows)]
    return ModulePresentation(
        base, GradedMatrix(base, mat.target, tuple(source), entries)
    )


def syzygies_over(ring, columns, twists):
    """Syzygy generators of column vectors over the (possibly quotient) ring.

    Over R = S/a the relation multiples a*e_i are appended before calling
    the ambient engine and the syzygies are restricted back to the given
    columns; components are reduced to normal form.
    """
    amb = ring.ambient
    r = len(columns)
    aug = list(columns)
    if not ring.is_polynomial_ring:
        for rel in ring.relations:
            for i in range(len(twists)):
                aug.append({(i, m): c for m, c in rel.terms.items()})
    raw, _ = syzygies_vectors(amb, aug, tuple(twists))
    out = []
    for v in raw:
        cut = {t: c for t, c in v.items() if t[0] < r}
        cut = vec_reduce_components(ring, cut)
        if cut:
            out.append(cut)
    # Columns that vanish modulo the relations get their unit syzygy
    # explicitly, in case reduction hid it.
    for j, col in enumerate(columns):
        if not vec_reduce_components(ring, col):
            unit = {(j, (0,) * amb.n): ring.field.one}
            out.append(unit)
    return out


def nakayama_minimal_subset(ring, twists, vectors, rels=()):
    """Indices of a minimal generating subset of <vectors> + <rels> / <rels>.

    Degree by degree, a vector is kept iff it lies outside the span of
    ring multiples of earlier kept vectors and of the auxiliary vectors.
    """
    F = ring.field
    degs = []
    for v in vectors:
        red = vec_reduce_components(ring, v)
        d = vec_degree(red, twists)
        degs.append((d, red))
    rel_data = []
    for v in rels:
        red = vec_reduce_components(ring, v)
        d = vec_degree(red, twists)
        if d is not None:
            rel_data.append((d, red))
    order = sorted(
        (d, i) for i, (d, red) in enumerate(degs) if d is not None
    )
    kept = []
    pos = 0
    while pos < len(order):
        degree = order[pos][0]
        basis = free_piece_basis(ring, twists, degree)
        index = {t: k for k, t in enumerate(basis)}
        span = Span(F, len(basis))

        def insert_multiples(vec, d):
            for m in ring.standard_monomials(degree - d):
                moved = {}
                for (p, mm), c in vec.items():
                    key = (p, tuple(x + y for x, y in zip(mm, m)))
                    moved[key] = F.add(moved.get(key, F.zero), c)
                red = vec_reduce_components(ring, moved)
                span.add(vec_coords(red, index, F))

        for d, red in rel_data:
            if d <= degree:
                insert_multiples(red, d)
        for i in kept:
            d, red = degs[i]
            if d < degree:
                insert_multiples(red, d)
        while pos < len(order) and order[pos][0] == degree:
            i = order[pos][1]
            if span.add(vec_coords(degs[i][1], index, F)):
                kept.append(i)
            pos += 1
    return kept


def present_subquotient(ring, twists, gens, rels=(), need_relations=True):
    """Minimal presentation of <gens> / <rels> inside a free module.

    Every relation vector must lie in the span of the generators.  The
    returned presentation has Nakayama-minimal generators; with
    ``need_relations`` the relation matrix is computed by a syzygy run
    and itself minimalized.  Also returns the indices of the surviving
    generators, so callers can align side data with them.
    """
    kept_idx = nakayama_minimal_subset(ring, twists, gens, rels)
    kept = [vec_reduce_components(ring, gens[i]) for i in kept_idx]
    kept_degs = [vec_degree(v, twists) for v in kept]
    if not kept:
        empty = GradedMatrix(ring, (), (), [])
        return ModulePresentation(ring, empty), []
    live_rels = [vec_reduce_components(ring, v) for v in rels]
    live_rels = [v for v in live_rels if v]
    if need_relations:
        all_cols = kept + live_rels
        syz = syzygies_over(ring, all_cols, twists)
        cut = []
        for v in syz:
            head = {(t[0], t[1]): c for t, c in v.items() if t[0] < len(kept)}
            head = vec_reduce_components(ring, head)
            if head:
                cut.append(head)
        keep_rel = nakayama_minimal_subset(ring, tuple(kept_degs), cut)
        rel_vecs = [cut[i] for i in keep_rel]
    else:
        rel_vecs = []
    mat = matrix_from_vectors(ring, tuple(kept_degs), rel_vecs)
    return ModulePresentation(ring, mat), kept_idx


def minimalize_presentation(module):
    """Minimal presentation of a cokernel: Nakayama on both sides."""
    mat = module.matrix
    gens = [
        {(i, (0,) * module.ring.n): module.ring.field.one} for i in range(mat.rows)
    ]
    pres, _ = present_subquotient(
        module.ring, mat.target, gens, mat.column_vectors(), need_relations=True
    )
    return pres
