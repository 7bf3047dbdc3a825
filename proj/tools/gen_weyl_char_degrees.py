#!/usr/bin/env python3
"""Generate character degree lists for the exceptional Weyl groups.

Computes the multiset of irreducible character degrees of W(G2), W(F4),
W(E6), W(E7), W(E8) from scratch:

  1. build the root system from the Cartan matrix,
  2. realize W as a permutation group on the roots,
  3. discover all conjugacy classes by closing the identity class under
     multiplication by reflections (class invariants: fixed-point profiles
     of powers on roots + characteristic polynomial on the reflection
     representation),
  4. build class-algebra multiplication matrices for small classes,
  5. split their common eigenspaces over F_P (P a large prime) to get the
     central characters, then read off class sizes (trivial character) and
     degrees (second orthogonality).

Everything is verified exactly at the end: class count matches, sum of
class sizes = |W|, each size divides |W|, degrees are integers whose
squares sum to |W|.

Writes data/weyl_char_degrees.json.
"""

import argparse
import json
import math
import numpy as np

P = (1 << 61) - 1  # arithmetic prime for the class algebra split

ORDER = {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}
NCLASSES = {"G2": 6, "F4": 25, "E6": 25, "E7": 60, "E8": 112}
MAX_ELT_ORDER = {"G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30}


def cartan(name):
    if name == "G2":
        return [[2, -1], [-3, 2]]
    if name == "F4":
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    n = int(name[1])
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
    chain = [1] + list(range(3, n + 1))
    for a, b in zip(chain, chain[1:]):
        C[a - 1][b - 1] = C[b - 1][a - 1] = -1
    C[1][3] = C[3][1] = -1
    return C


def symmetrizer(C):
    from fractions import Fraction
    n = len(C)
    d = [Fraction(0)] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and C[i][j] and not d[j]:
                # want d_i C[i][j] == d_j C[j][i]
                d[j] = d[i] * C[i][j] / C[j][i]
                stack.append(j)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    out = [int(x * lcm) for x in d]
    if min(out) < 0:
        out = [-x for x in out]
    g = math.gcd(*out)
    return [x // g for x in out]


class RootSystem:
    def __init__(self, name):
        self.name = name
        C = cartan(name)
        self.n = n = len(C)
        self.C = C
        dvec = symmetrizer(C)
        self.B = [[dvec[i] * C[i][j] for j in range(n)] for i in range(n)]
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        roots = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for b in frontier:
                for i in range(n):
                    c = sum(C[i][j] * b[j] for j in range(n))
                    r = tuple(b[j] - (c if j == i else 0) for j in range(n))
                    if r not in roots:
                        roots.add(r)
                        nxt.append(r)
            frontier = nxt
        self.roots = sorted(roots)
        self.nroots = len(self.roots)
        self.idx = {r: k for k, r in enumerate(self.roots)}
        self.simple_pos = [self.idx[s] for s in simple]
        norms = [self.pair(r, r) for r in self.roots]
        self.length_masks = []
        for nv in sorted(set(norms)):
            self.length_masks.append(np.array([x == nv for x in norms], dtype=bool))

    def pair(self, beta, alpha):
        B = self.B
        n = self.n
        return sum(beta[i] * B[i][j] * alpha[j] for i in range(n) for j in range(n))

    def reflection_perm(self, alpha):
        aa = self.pair(alpha, alpha)
        perm = np.empty(self.nroots, dtype=np.int16)
        for t, beta in enumerate(self.roots):
            c2 = 2 * self.pair(beta, alpha)
            assert c2 % aa == 0
            q = c2 // aa
            img = tuple(beta[i] - q * alpha[i] for i in range(self.n))
            perm[t] = self.idx[img]
        return perm

    def all_reflections(self):
        seen = {}
        for alpha in self.roots:
            p = self.reflection_perm(alpha)
            seen[p.tobytes()] = p
        return list(seen.values())

    def matrix_of(self, perm):
        cols = [self.roots[perm[k]] for k in self.simple_pos]
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]


def charpoly_int(M):
    """det(xI - M) for an integer matrix, by Faddeev-LeVerrier (exact)."""
    n = len(M)
    coeffs = [1]  # leading coefficient of x^n
    A = [row[:] for row in M]
    Mk = [row[:] for row in M]
    c = -sum(Mk[i][i] for i in range(n))
    coeffs.append(c)
    for k in range(2, n + 1):
        # Mk <- M * (Mk + c*I)
        T = [[Mk[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(A[i][t] * T[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(Mk[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs.append(c)
    return tuple(coeffs)


class ClassData:
    """Conjugacy class bookkeeping with two-level invariants."""

    def __init__(self, rs, powers):
        self.rs = rs
        self.powers = powers  # list of exponents for fixed-point profile
        self.reps = []        # numpy perms
        self.profile = []     # fixed-point profile per class
        self.cp = []          # charpoly per class
        self.by_profile = {}  # profile bytes -> list of class ids

    def _profile_of(self, perm):
        out = []
        idx = np.arange(self.rs.nroots, dtype=np.int16)
        pw = {1: perm}
        for k in range(2, max(self.powers) + 1):
            pw[k] = perm[pw[k - 1]]
        for k in self.powers:
            fixed = pw[k] == idx
            for mask in self.rs.length_masks:
                out.append(int(fixed[mask].sum()))
        return tuple(out)

    def _cp_full(self, perm):
        p2 = perm[perm]
        p3 = perm[p2]
        return (charpoly_int(self.rs.matrix_of(perm)),
                charpoly_int(self.rs.matrix_of(p2)),
                charpoly_int(self.rs.matrix_of(p3)))

    def identify_or_add(self, perm):
        prof = self._profile_of(perm)
        key = bytes(str(prof), "ascii")
        bucket = self.by_profile.get(key)
        if bucket is None:
            return self._add(perm, prof, key)
        if len(bucket) == 1 and self.cp[bucket[0]] is None:
            return bucket[0]
        cp = self._cp_full(perm)
        for cid in bucket:
            if self.cp[cid] is None:
                self.cp[cid] = self._cp_full(self.reps[cid])
            if self.cp[cid] == cp:
                return cid
        return self._add(perm, prof, key, cp)

    def _add(self, perm, prof, key, cp=None):
        cid = len(self.reps)
        self.reps.append(perm.copy())
        self.profile.append(prof)
        self.cp.append(cp)
        bucket = self.by_profile.setdefault(key, [])
        if bucket and cp is None:
            self.cp[cid] = self._cp_full(perm)
        bucket.append(cid)
        if len(bucket) > 1:
            for other in bucket:
                if self.cp[other] is None:
                    self.cp[other] = charpoly_int(self.rs.matrix_of(self.reps[other]))
            cps = [self.cp[other] for other in bucket]
            assert len(set(cps)) == len(cps), \
                "class invariants do not separate: extend the profile"
        return cid

    def identify_many(self, stack):
        """Identify classes for a stack of permutations (numpy, rows)."""
        nr = self.rs.nroots
        idx = np.arange(nr, dtype=np.int16)
        fixcounts = []
        pw = {1: stack}
        for k in range(2, max(self.powers) + 1):
            pw[k] = np.take_along_axis(stack, pw[k - 1], axis=1)
        for k in self.powers:
            fixed = pw[k] == idx[None, :]
            for mask in self.rs.length_masks:
                fixcounts.append(fixed[:, mask].sum(axis=1))
        profs = np.stack(fixcounts, axis=1)
        out = np.empty(len(stack), dtype=np.int32)
        # group rows by profile
        order = np.lexsort(profs.T[::-1])
        sorted_profs = profs[order]
        boundaries = np.nonzero(np.any(np.diff(sorted_profs, axis=0) != 0, axis=1))[0] + 1
        starts = np.concatenate([[0], boundaries])
        ends = np.concatenate([boundaries, [len(stack)]])
        for s, e in zip(starts, ends):
            prof = tuple(int(x) for x in sorted_profs[s])
            key = bytes(str(prof), "ascii")
            bucket = self.by_profile.get(key)
            assert bucket, f"unknown profile {prof}: incomplete class discovery"
            if len(bucket) == 1:
                out[order[s:e]] = bucket[0]
            else:
                for t in order[s:e]:
                    cp = self._cp_full(stack[t])
                    hit = [cid for cid in bucket if self.cp[cid] == cp]
                    assert len(hit) == 1
                    out[t] = hit[0]
        return out


def class_bfs(rs, gens_with_inv, rep, cap):
    seen = {rep.tobytes(): rep}
    frontier = [rep]
    while frontier:
        nxt = []
        for x in frontier:
            for g, gi in gens_with_inv:
                y = g[x[gi]]
                key = y.tobytes()
                if key not in seen:
                    if len(seen) >= cap:
                        return None
                    seen[key] = y
                    nxt.append(y)
        frontier = nxt
    return np.stack(list(seen.values()))


def mod_rref(mat):
    mat = [row[:] for row in mat]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if mat[i][c] % P), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], P - 2, P)
        mat[r] = [(x * inv) % P for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] % P:
                f = mat[i][c]
                mat[i] = [(x - f * y) % P for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    return mat[:r], piv_cols


def mod_nullspace(mat):
    red, piv_cols = mod_rref(mat)
    cols = len(mat[0])
    free = [c for c in range(cols) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(piv_cols):
            v[pc] = (-red[r][fc]) % P
        basis.append(v)
    return basis


def compute(name, cap=120000, verbose=True):
    rs = RootSystem(name)
    order = ORDER[name]
    log = (lambda *a: print(f"[{name}]", *a, flush=True)) if verbose else (lambda *a: None)
    log(f"roots={rs.nroots}")

    reflections = rs.all_reflections()
    log(f"reflections={len(reflections)}")
    gens = []
    for sp in rs.simple_pos:
        alpha = rs.roots[sp]
        g = rs.reflection_perm(alpha)
        gi = np.argsort(g).astype(np.int16)
        gens.append((g, gi))

    powers = sorted(set(list(range(1, MAX_ELT_ORDER[name] + 1))))
    cd = ClassData(rs, powers)
    identity = np.arange(rs.nroots, dtype=np.int16)
    cd.identify_or_add(identity)

    # ---- discover classes: closure of {1} under left mult by reflections ----
    refl_inv = [np.argsort(r).astype(np.int16) for r in reflections]
    queue = [0]
    while queue:
        k = queue.pop()
        xk = cd.reps[k]
        before = len(cd.reps)
        for ri in refl_inv:
            y = ri[xk]
            cid = cd.identify_or_add(y)
            if cid >= before:
                queue.append(cid)
                before = len(cd.reps)
    ncls = len(cd.reps)
    log(f"discovered {ncls} classes (expected {NCLASSES[name]})")
    assert ncls == NCLASSES[name]

    inv_of = [int(cd.identify_or_add(np.argsort(r).astype(np.int16))) for r in cd.reps]
    assert len(cd.reps) == ncls

    # ---- class multiplication matrices for small classes ----
    def nmatrix(cls_stack):
        inv_stack = np.argsort(cls_stack, axis=1).astype(np.int16)
        N = [[0] * ncls for _ in range(ncls)]
        for k in range(ncls):
            xk = cd.reps[k]
            prods = inv_stack[:, xk]  # rows: a^{-1} o x_k, since (a^-1 o x_k)(t)=a^-1[x_k[t]]
            cls_ids = cd.identify_many(prods)
            cnt = np.bincount(cls_ids, minlength=ncls)
            row = N[k]
            for j in np.nonzero(cnt)[0]:
                row[int(j)] += int(cnt[j])
        return N

    def int_eigenvalues(N, bound):
        ev = np.linalg.eigvals(np.array(N, dtype=np.float64))
        out = set()
        for z in ev:
            if abs(z.imag) < 0.45:
                out.add(int(round(z.real)))
        return sorted(v for v in out if abs(v) <= bound)

    subspaces = [[[1 if i == j else 0 for j in range(ncls)] for i in range(ncls)]]

    def refine(N, size):
        nonlocal subspaces
        evs = int_eigenvalues(N, size + 2)
        new_subs = []
        for sub in subspaces:
            m = len(sub)
            if m == 1:
                new_subs.append(sub)
                continue
            bm, piv = mod_rref(sub)
            assert len(bm) == m
            # restricted operator in rref basis: columns = coords of N*b_j at pivots
            R = [[0] * m for _ in range(m)]
            for j in range(m):
                w = [sum(N[i][t] * bm[j][t] for t in range(ncls)) % P for i in range(ncls)]
                for r in range(m):
                    R[r][j] = w[piv[r]]
            total = 0
            for lam in evs:
                M = [[(R[i][jj] - (lam if i == jj else 0)) % P for jj in range(m)] for i in range(m)]
                ns = mod_nullspace(M)
                if ns:
                    vecs = [[sum(cv[t] * bm[t][i] for t in range(m)) % P for i in range(ncls)]
                            for cv in ns]
                    new_subs.append(vecs)
                    total += len(ns)
            assert total == m, "numeric eigenvalue candidates incomplete"
        subspaces = new_subs

    def split_done():
        return all(len(s) == 1 for s in subspaces)

    tried = set()
    # reflection class first, then other small classes
    refl_stack = class_bfs(rs, gens, reflections[0], cap)
    assert refl_stack is not None
    refl_cid = cd.identify_many(refl_stack[:1])[0]
    tried.add(int(refl_cid))
    log(f"splitting with reflection class, size {len(refl_stack)}")
    refine(nmatrix(refl_stack), len(refl_stack))

    for k in range(ncls):
        if split_done():
            break
        if k in tried or k == 0:
            continue
        stack = class_bfs(rs, gens, cd.reps[k], cap)
        if stack is None:
            continue
        tried.add(k)
        left = sum(1 for s in subspaces if len(s) > 1)
        log(f"refining with class #{k} size {len(stack)} ({left} subspaces unsplit)")
        refine(nmatrix(stack), len(stack))
    assert split_done(), "class algebra not fully split; raise cap"

    # ---- sizes and degrees ----
    # Normalized at the identity class, the eigenvector for chi has entries
    # v_j = chi(x_{jbar}) / chi(1).  The class-size vector is the unique
    # (up to scale) common kernel vector of the non-trivial rows, by row
    # orthogonality against the trivial character.
    def lift(x):
        x %= P
        return x if x <= P // 2 else x - P

    vectors = []
    for s in subspaces:
        v = s[0]
        c = v[0] % P  # identity class is class 0
        assert c
        inv = pow(c, P - 2, P)
        vectors.append([(x * inv) % P for x in v])

    nontrivial = [v for v in vectors if any((x - 1) % P for x in v)]
    assert len(nontrivial) == ncls - 1, "trivial character not located"
    kern = mod_nullspace(nontrivial)
    assert len(kern) == 1
    s0 = kern[0]
    assert s0[0] % P
    inv0 = pow(s0[0], P - 2, P)
    sizes = [lift(x * inv0 % P) for x in s0]
    assert all(c > 0 for c in sizes) and sum(sizes) == order
    assert all(order % c == 0 for c in sizes)

    size_mod = [c % P for c in sizes]
    degrees = []
    for v in vectors:
        S = 0
        for j in range(ncls):
            S = (S + size_mod[j] * v[j] % P * v[inv_of[j]]) % P
        d2 = lift(order * pow(S, P - 2, P) % P)
        assert d2 > 0
        d = math.isqrt(d2)
        assert d * d == d2
        degrees.append(d)
    degrees.sort()
    assert len(degrees) == ncls
    assert sum(d * d for d in degrees) == order
    log(f"degrees: {degrees}")
    return {"group": name, "order": order, "degrees": degrees}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", default=None)
    ap.add_argument("--out", default="data/weyl_char_degrees.json")
    args = ap.parse_args()
    names = [args.only] if args.only else ["G2", "F4", "E6", "E7", "E8"]
    results = [compute(name) for name in names]
    if args.only:
        print(json.dumps(results[0]))
        return
    payload = {"schema": "weyl-char-degrees/1", "groups": results}
    with open(args.out, "w") as f:
        json.dump(payload, f, indent=1, sort_keys=True)
        f.write("\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
