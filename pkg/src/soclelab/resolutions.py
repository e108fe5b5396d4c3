"""Syzygies, minimal graded free resolutions, Hom, kernels, and Tor.

Over the polynomial ring resolutions terminate within the variable
count; over a quotient R = S/a only truncations are computed, with all
arithmetic done on ambient lifts reduced against a fixed basis of the
relations.  Minimality means every differential entry lies in the
irrelevant ideal, enforced by taking Nakayama-minimal generating sets of
each syzygy module.
"""

from .errors import StructuralError, TruncationError
from .modules import (
    GradedMatrix,
    ModulePresentation,
    matrix_from_vectors,
    nakayama_minimal_subset,
    present_subquotient,
    s_presentation,
    syzygies_over,
    vec_reduce_components,
)


class BettiTable:
    """beta_{i,j}: number of degree-j twists at homological step i."""

    def __init__(self, entries):
        self.entries = dict(entries)

    @classmethod
    def from_twist_lists(cls, twist_lists):
        entries = {}
        for i, twists in enumerate(twist_lists):
            for a in twists:
                entries[(i, a)] = entries.get((i, a), 0) + 1
        return cls(entries)

    def beta(self, i, j):
        return self.entries.get((i, j), 0)

    def max_step(self):
        return max((i for i, _ in self.entries), default=-1)

    def regularity(self):
        """max(j - i) over nonzero entries; the Betti-side regularity."""
        return max(j - i for (i, j) in self.entries)

    def rows(self):
        out = []
        for (i, j), b in sorted(self.entries.items()):
            out.append((i, j, b))
        return out

    def __repr__(self):
        return f"BettiTable({self.entries})"


class Resolution:
    """Chain of matrices d_1, d_2, ... with F_0 the first target.

    ``complete`` records whether the chain ended because the last syzygy
    module vanished (as opposed to hitting a requested truncation).
    """

    def __init__(self, ring, f0_twists, matrices, complete=True):
        self.ring = ring
        self.f0_twists = tuple(f0_twists)
        self.matrices = list(matrices)
        self.complete = complete

    @property
    def length(self):
        return len(self.matrices)

    def twist_lists(self):
        out = [self.f0_twists]
        for m in self.matrices:
            out.append(m.source)
        # Trailing empty steps carry no information.
        while out and not out[-1]:
            out.pop()
        return out

    def module_twists(self, i):
        lists = [self.f0_twists] + [m.source for m in self.matrices]
        if i < 0:
            return ()
        if i >= len(lists):
            return ()
        return lists[i]

    def betti(self):
        return BettiTable.from_twist_lists(self.twist_lists())

    def check_complex(self):
        """d o d = 0 (modulo relations when over a quotient)."""
        for a, b in zip(self.matrices, self.matrices[1:]):
            if not a.compose(b).is_zero_mod_relations():
                return False
        return True

    def check_minimal(self):
        for m in self.matrices:
            for row in m.entries:
                for f in row:
                    if not f.is_zero() and f.degree() < 1:
                        return False
        return True


def syzygy(matrix):
    """Minimal generators of the kernel of the induced map of free modules."""
    ring = matrix.ring
    cols = matrix.column_vectors()
    raw = syzygies_over(ring, cols, matrix.target)
    keep = nakayama_minimal_subset(ring, matrix.source, raw)
    vecs = [vec_reduce_components(ring, raw[i]) for i in keep]
    return matrix_from_vectors(ring, matrix.source, vecs)


def minimal_free_resolution(module, max_length=None):
    """Minimal graded free resolution over the polynomial ring.

    A module handed in over a quotient is folded into its ambient
    presentation first.  Terminates within the number of variables
    (asserted); ``max_length`` only truncates earlier.
    """
    module = s_presentation(module)
    ring = module.ring
    if module._resolution is not None and max_length is None:
        return module._resolution
    from .modules import minimalize_presentation

    pres = minimalize_presentation(module)
    f0 = pres.matrix.target
    matrices = []
    complete = True
    if pres.matrix.cols:
        matrices.append(pres.matrix)
        while True:
            if max_length is not None and len(matrices) >= max_length:
                complete = False
                break
            nxt = syzygy(matrices[-1])
            if nxt.cols == 0:
                break
            matrices.append(nxt)
        if complete and len(matrices) > ring.n:
            raise StructuralError("resolution exceeded the variable count")
    res = Resolution(ring, f0, matrices, complete=complete)
    if max_length is None:
        module._resolution = res
    return res


def truncated_resolution(module, steps):
    """First ``steps`` minimal syzygy matrices of a module over its ring.

    Over a quotient ring resolutions are generally infinite, so only a
    truncation is computed; over the polynomial ring this just stops the
    full resolution early.  Minimality holds step by step.
    """
    if steps < 0:
        raise StructuralError("steps must be >= 0")
    from .modules import minimalize_presentation

    ring = module.ring
    pres = minimalize_presentation(module)
    matrices = []
    complete = pres.matrix.cols == 0
    if steps >= 1 and pres.matrix.cols:
        matrices.append(pres.matrix)
        while len(matrices) < steps:
            nxt = syzygy(matrices[-1])
            if nxt.cols == 0:
                complete = True
                break
            matrices.append(nxt)
    res = Resolution(ring, pres.matrix.target, matrices, complete=complete)
    if not res.check_minimal():
        raise StructuralError("truncated resolution lost minimality")
    return res


def residue_field_resolution(ring, steps):
    """Truncated minimal free resolution of the residue field over R.

    Returns a Resolution whose step-i twists give the alpha invariants;
    ``steps`` counts differentials (steps=0 means just F_0 = R).
    """
    if steps < 0:
        raise StructuralError("steps must be >= 0")
    amb = ring.ambient
    matrices = []
    complete = steps == 0 and amb.n == 0
    if steps >= 1:
        gens = []
        for i in range(amb.n):
            e = [0] * amb.n
            e[i] = 1
            gens.append({(0, tuple(e)): ring.field.one})
        keep = nakayama_minimal_subset(ring, (0,), gens)
        vecs = [vec_reduce_components(ring, gens[i]) for i in keep]
        matrices.append(matrix_from_vectors(ring, (0,), vecs))
        complete = False
        while len(matrices) < steps:
            nxt = syzygy(matrices[-1])
            if nxt.cols == 0:
                complete = True
                break
            matrices.append(nxt)
    res = Resolution(ring, (0,), matrices, complete=complete)
    if not res.check_minimal():
        raise StructuralError("residue field resolution lost minimality")
    return res


def alpha_invariants(kres, up_to):
    """alpha_i = max twist at step i of the residue-field resolution.

    None marks a vanishing step (finite resolutions only); asking past a
    truncation raises.
    """
    out = []
    for i in range(up_to + 1):
        if i <= kres.length:
            twists = kres.module_twists(i)
            out.append(max(twists) if twists else None)
        elif kres.complete:
            out.append(None)
        else:
            raise TruncationError(f"resolution truncated before step {i}")
    return out


# ---------------------------------------------------------------------------
# Hom, kernel/image, and Tor against the residue field.


def _hom_free_into(module, twists):
    """Presentation data of Hom(free with twists, module).

    Positions are packed (component of the free module, generator of the
    module); generator (i, g) has degree gens[g] - twists[i].
    """
    r = len(module.generator_degrees)
    target = []
    for a in twists:
        for g in module.generator_degrees:
            target.append(g - a)
    cols = []
    mat = module.matrix
    for i in range(len(twists)):
        for j in range(mat.cols):
            col = {}
            for g in range(mat.rows):
                f = mat.entries[g][j]
                for m, c in f.terms.items():
                    col[(i * r + g, m)] = c
            cols.append(col)
    return tuple(target), cols


def module_hom(source, target):
    """Hom(source, target) with explicit homomorphism witnesses.

    Returns (presentation, witnesses); witness k is a dict mapping
    (source generator index, target generator index) to the polynomial
    coefficient, describing where the k-th Hom generator sends each
    source generator.
    """
    if source.ring != target.ring:
        raise StructuralError("Hom needs both modules over one ring")
    ring = source.ring
    r = len(target.generator_degrees)
    a_mat = source.matrix
    hom0_twists, hom0_rels = _hom_free_into(target, a_mat.target)
    hom1_twists, hom1_rels = _hom_free_into(target, a_mat.source)
    # Map Hom(F0, N) -> Hom(F1, N): precompose with the presentation.
    phi_cols = []
    for i in range(a_mat.rows):
        for g in range(r):
            col = {}
            for j in range(a_mat.cols):
                f = a_mat.entries[i][j]
                for m, c in f.terms.items():
                    key = (j * r + g, m)
                    col[key] = ring.field.add(col.get(key, ring.field.zero), c)
            phi_cols.append(col)
    kernel_gens = _kernel_block(ring, phi_cols, hom0_twists, hom1_twists, hom1_rels)
    pres, kept = present_subquotient(ring, hom0_twists, kernel_gens, hom0_rels)
    witnesses = []
    for k in kept:
        vec = vec_reduce_components(ring, kernel_gens[k])
        wit = {}
        for (pos, m), c in vec.items():
            i, g = divmod(pos, r)
            wit.setdefault((i, g), {})[m] = c
        witnesses.append(
            {
                key: _poly_of(ring, terms)
                for key, terms in wit.items()
            }
        )
    return pres, witnesses


def _poly_of(ring, terms):
    from .poly import Polynomial

    return Polynomial(ring.ambient, terms)


def _kernel_block(ring, phi_cols, src_twists, dst_twists, dst_rels):
    """Generators of {v : phi(v) lies in the relation span downstairs}."""
    width = len(phi_cols)
    all_cols = phi_cols + list(dst_rels)
    syz = syzygies_over(ring, all_cols, dst_twists)
    out = []
    for v in syz:
        head = {t: c for t, c in v.items() if t[0] < width}
        head = vec_reduce_components(ring, head)
        if head:
            out.append(head)
    # A wrinkle: syzygies were taken of columns indexed by phi's source
    # generators, so heads already live in the source free module.
    return out


def module_map(source, target, entries):
    """Wrap a generator-level matrix as a degree-preserving map."""
    mat = GradedMatrix(
        source.ring,
        target.generator_degrees,
        source.generator_degrees,
        entries,
    )
    return mat


def module_kernel_image(source, target, phi):
    """Kernel and image presentations of a map given on generators.

    ``phi`` is a GradedMatrix from the source generators to the target
    generators (degree-preserving; checked at construction).  Returns
    (kernel, image) presentations, plus the kernel generators as ambient
    vectors of the source.
    """
    if phi.target != target.generator_degrees or phi.source != source.generator_degrees:
        raise StructuralError("map does not match the presentations")
    ring = source.ring
    phi_cols = phi.column_vectors()
    kernel_gens = _kernel_block(
        ring, phi_cols, source.generator_degrees,
        target.generator_degrees, target.matrix.column_vectors(),
    )
    ker_pres, kept = present_subquotient(
        ring, source.generator_degrees, kernel_gens,
        source.matrix.column_vectors(),
    )
    live_cols = [c for c in phi_cols]
    im_pres, _ = present_subquotient(
        ring, target.generator_degrees, live_cols,
        target.matrix.column_vectors(),
    )
    kept_vecs = [kernel_gens[k] for k in kept]
    return ker_pres, im_pres, kept_vecs


def shifted_sum(module, shifts):
    """Direct sum of copies of the module twisted by -shift for each shift."""
    ring = module.ring
    mat = module.matrix
    r = mat.rows
    target = []
    for s in shifts:
        for g in mat.target:
            target.append(g + s)
    cols = []
    source = []
    for b, s in enumerate(shifts):
        for j in range(mat.cols):
            col = {}
            for g in range(r):
                f = mat.entries[g][j]
                for m, c in f.terms.items():
                    col[(b * r + g, m)] = c
            cols.append(col)
            source.append(mat.source[j] + s)
    entries_mat = matrix_from_vectors(ring, tuple(target), cols, tuple(source))
    return ModulePresentation(ring, entries_mat)


def tensor_map_columns(d_matrix, module):
    """Columns of d (x) module on generator level, as ambient vectors.

    d maps a free module with source twists into one with target twists;
    the tensored map goes between the corresponding shifted sums.
    """
    r = len(module.generator_degrees)
    cols = []
    for v in range(d_matrix.cols):
        for g in range(r):
            col = {}
            for u in range(d_matrix.rows):
                f = d_matrix.entries[u][v]
                for m, c in f.terms.items():
                    col[(u * r + g, m)] = c
            cols.append(col)
    return cols


def tor_residue_field(ring, i, module, kres):
    """Graded dimensions of Tor_i(k, module) over R.

    Computed as homology of (truncated residue-field resolution) tensor
    the module; needs the resolution through step i+1 and raises
    TruncationError otherwise.  The answer is a degree -> dimension map.
    """
    if i < 0:
        return {}
    if kres.length < i + 1 and not kres.complete:
        raise TruncationError(
            f"residue-field resolution has {kres.length} steps; Tor_{i} needs {i + 1}"
        )
    if not kres.module_twists(i):
        return {}
    q_i = shifted_sum(module, kres.module_twists(i))
    if i == 0:
        gens = [
            {(p, (0,) * ring.n): ring.field.one}
            for p in range(len(q_i.generator_degrees))
        ]
    else:
        phi_i_cols = tensor_map_columns(kres.matrices[i - 1], module)
        q_prev = shifted_sum(module, kres.module_twists(i - 1))
        gens = _kernel_block(
            ring, phi_i_cols, q_i.generator_degrees,
            q_prev.generator_degrees, q_prev.matrix.column_vectors(),
        )
    rels = list(q_i.matrix.column_vectors())
    if i + 1 <= kres.length:
        rels += tensor_map_columns(kres.matrices[i], module)
    pres, _ = present_subquotient(
        ring, q_i.generator_degrees, gens, rels, need_relations=False
    )
    dims = {}
    for d in pres.generator_degrees:
        dims[d] = dims.get(d, 0) + 1
    return dims
