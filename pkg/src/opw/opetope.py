"""Opetopes as addressed trees.

An opetope of dimension m >= 2 is either degenerate on an (m-2)-opetope or a
non-empty tree whose nodes are decorated by (m-1)-opetopes.  Node addresses of
an m-opetope are (m-1)-dimensional: lists of (m-2)-addresses, the unique
0-address being the token ``*``.  Everything is immutable and interned, so
equality and hashing are O(1) and structural equality coincides with identity.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    DanglingAddress,
    DecorationMismatch,
    DimensionMismatch,
    DimensionTooLow,
    EdgeMismatch,
    MissingRoot,
    NotALeaf,
    NotANode,
    NotInnerEdge,
)


class Address:
    """A dimension-indexed path: a sequence of addresses one dimension lower.

    Addresses of equal dimension are totally ordered lexicographically, with a
    proper prefix sorting before its extensions.
    """

    __slots__ = ("dim", "path", "_hash", "_key")
    _pool: dict = {}

    def __new__(cls, dim: int, path: tuple = ()):
        key = (dim, path)
        cached = cls._pool.get(key)
        if cached is not None:
            return cached
        if dim == 0 and path:
            raise DimensionMismatch("the 0-dimensional address has an empty path")
        for entry in path:
            if entry.dim != dim - 1:
                raise DimensionMismatch(
                    f"entry {entry} of a dim-{dim} address must have dim {dim - 1}"
                )
        self = object.__new__(cls)
        self.dim = dim
        self.path = path
        self._hash = hash(key)
        self._key = tuple(e._key for e in path)
        cls._pool[key] = self
        return self

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __lt__(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch("cannot order addresses of different dimensions")
        return self._key < other._key

    def __le__(self, other):
        return self is other or self < other

    def __len__(self):
        return len(self.path)

    def append(self, entry: "Address") -> "Address":
        return Address(self.dim, self.path + (entry,))

    def extend(self, other: "Address") -> "Address":
        """Concatenate two paths of the same dimension."""
        if other.dim != self.dim:
            raise DimensionMismatch("cannot concatenate addresses of different dims")
        return Address(self.dim, self.path + other.path)

    def is_prefix_of(self, other: "Address") -> bool:
        return (
            self.dim == other.dim
            and len(self.path) <= len(other.path)
            and other.path[: len(self.path)] == self.path
        )

    def drop_prefix(self, prefix: "Address") -> "Address":
        if not prefix.is_prefix_of(self):
            raise DanglingAddress(f"{prefix} is not a prefix of {self}")
        return Address(self.dim, self.path[len(prefix.path):])

    @property
    def parent(self) -> "Address":
        if not self.path:
            raise NotANode("the empty address has no parent")
        return Address(self.dim, self.path[:-1])

    @property
    def last(self) -> "Address":
        return self.path[-1]

    def __repr__(self):
        return f"Address({self})"

    def __str__(self):
        if self.dim == 0:
            return "*"
        return "[" + "".join(str(e) for e in self.path) + "]"


STAR = Address(0)


def epsilon(dim: int) -> Address:
    """The empty address of the given dimension (``*`` in dimension 0)."""
    return Address(dim)


POINT_KIND, ARROW_KIND, DEGEN_KIND, TREE_KIND = range(4)


class OpetopeStructure(NamedTuple):
    """Node/leaf/edge data of an opetope of dimension >= 2."""

    nodes: tuple
    leaves: tuple
    edges: dict
    inner_edges: tuple


class Opetope:
    """An interned opetope: point, arrow, degenerate, or addressed tree."""

    __slots__ = (
        "dim", "kind", "of", "nodes", "_node_map", "_hash", "_key",
        "_structure", "_target", "_subtrees",
    )
    _pool: dict = {}

    def __new__(cls, kind: int, dim: int, of: Optional["Opetope"] = None,
                nodes: tuple = ()):
        key = (kind, dim, of, nodes)
        cached = cls._pool.get(key)
        if cached is not None:
            return cached
        self = object.__new__(cls)
        self.kind = kind
        self.dim = dim
        self.of = of
        self.nodes = nodes
        self._node_map = dict(nodes)
        self._hash = hash(key)
        if kind == POINT_KIND:
            self._key = (0, 0)
        elif kind == ARROW_KIND:
            self._key = (1, 0)
        elif kind == DEGEN_KIND:
            self._key = (dim, 1, of._key)
        else:
            self._key = (dim, 2, tuple((a._key, d._key) for a, d in nodes))
        self._structure = None
        self._target = None
        self._subtrees = None
        cls._pool[key] = self
        return self

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __lt__(self, other):
        return self._key < other._key

    @property
    def is_degenerate(self) -> bool:
        return self.kind == DEGEN_KIND

    @property
    def is_tree(self) -> bool:
        return self.kind == TREE_KIND

    def node_map(self) -> dict:
        return self._node_map

    def decoration(self, addr: Address) -> "Opetope":
        dec = self._node_map.get(addr)
        if dec is None:
            raise NotANode(f"{addr} is not a node of {self}")
        return dec

    @property
    def n_nodes(self) -> int:
        if self.kind == TREE_KIND:
            return len(self.nodes)
        if self.kind == ARROW_KIND:
            return 1
        return 0

    def __repr__(self):
        return f"Opetope({self})"

    def __str__(self):
        from .textio import format_opetope
        return format_opetope(self)


def point() -> Opetope:
    return Opetope(POINT_KIND, 0)


def arrow() -> Opetope:
    return Opetope(ARROW_KIND, 1)


def degenerate(of: Opetope) -> Opetope:
    return Opetope(DEGEN_KIND, of.dim + 2, of=of)


def tree(node_map: dict) -> Opetope:
    """Build a tree opetope from an address -> decoration mapping (unchecked
    beyond basic shape; run :func:`validate` on untrusted input)."""
    if not node_map:
        raise MissingRoot("a tree opetope needs at least a root node")
    items = sorted(node_map.items(), key=lambda kv: kv[0]._key)
    dims = {d.dim for _, d in node_map.items()}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed decoration dimensions {sorted(dims)}")
    (dec_dim,) = dims
    for addr in node_map:
        if addr.dim != dec_dim:
            raise DimensionMismatch(
                f"node address {addr} has dim {addr.dim}, expected {dec_dim}"
            )
    if dec_dim == 0:
        # a tree of points is the arrow
        if set(node_map) != {STAR}:
            raise DanglingAddress("a 1-dimensional tree has the single node *")
        return arrow()
    return Opetope(TREE_KIND, dec_dim + 1, nodes=tuple(items))


def corolla(psi: Opetope) -> Opetope:
    """The one-node tree Y_psi."""
    if psi.kind == POINT_KIND:
        return arrow()
    return tree({epsilon(psi.dim): psi})


def source_addresses(psi: Opetope) -> tuple:
    """Addresses of the source faces of ``psi`` (= its node addresses)."""
    if psi.kind == TREE_KIND:
        return tuple(a for a, _ in psi.nodes)
    if psi.kind == ARROW_KIND:
        return (STAR,)
    return ()


def source_face(psi: Opetope, q: Address) -> Opetope:
    """The source face of ``psi`` at address ``q``."""
    if psi.kind == ARROW_KIND:
        if q is STAR:
            return point()
        raise NotANode(f"{q} is not a source address of the arrow")
    if psi.kind == TREE_KIND:
        return psi.decoration(q)
    raise NotANode(f"{psi} has no source at {q}")


def validate(raw: Opetope) -> Opetope:
    """Check the full tree conditions (root, closure, well-decoration)
    recursively and return the canonical opetope."""
    if raw.kind in (POINT_KIND, ARROW_KIND):
        return raw
    if raw.kind == DEGEN_KIND:
        validate(raw.of)
        return raw
    node_map = raw.node_map()
    root = epsilon(raw.dim - 1)
    if root not in node_map:
        raise MissingRoot(f"tree of dim {raw.dim} has no root node")
    for addr, dec in raw.nodes:
        if dec.dim != raw.dim - 1:
            raise DimensionMismatch(
                f"decoration at {addr} has dim {dec.dim}, expected {raw.dim - 1}"
            )
        validate(dec)
        if addr is root:
            continue
        par, q = addr.parent, addr.last
        pdec = node_map.get(par)
        if pdec is None:
            raise DanglingAddress(f"node {addr} has no parent node {par}")
        if q not in source_addresses(pdec):
            raise DanglingAddress(
                f"{q} is not a source address of the decoration at {par}"
            )
        expected = source_face(pdec, q)
        if target(dec) is not expected:
            raise DecorationMismatch(
                f"target of decoration at {addr} is {target(dec)}, "
                f"expected {expected}"
            )
    return raw


def structure(omega: Opetope) -> OpetopeStructure:
    """Nodes, leaves, edges and inner edges of an opetope of dim >= 2."""
    if omega.dim <= 1:
        raise DimensionTooLow(f"structure needs dim >= 2, got {omega.dim}")
    if omega._structure is not None:
        return omega._structure
    root = epsilon(omega.dim - 1)
    if omega.kind == DEGEN_KIND:
        st = OpetopeStructure(
            nodes=(), leaves=(root,), edges={root: omega.of}, inner_edges=()
        )
    else:
        node_map = omega.node_map()
        nodes = tuple(a for a, _ in omega.nodes)
        edges = {root: target(node_map[root])}
        leaves = []
        inner = []
        for addr, dec in omega.nodes:
            if addr is not root:
                inner.append(addr)
            for q in source_addresses(dec):
                e = addr.append(q)
                edges[e] = source_face(dec, q)
                if e not in node_map:
                    leaves.append(e)
        st = OpetopeStructure(
            nodes=nodes,
            leaves=tuple(sorted(leaves, key=lambda a: a._key)),
            edges=edges,
            inner_edges=tuple(inner),
        )
    omega._structure = st
    return st


def edge_decoration(omega: Opetope, e: Address) -> Opetope:
    edges = structure(omega).edges
    if e not in edges:
        raise DanglingAddress(f"{e} is not an edge of {omega}")
    return edges[e]


class SubstResult(NamedTuple):
    """Result of replacing a node by a tree, with address-rewrite maps.

    ``node_map`` sends every surviving node of the host (all but the replaced
    one) to its new address; ``embed`` sends nodes of the replacement tree to
    their new addresses; ``edge_map`` extends ``node_map`` to all edges.
    """

    result: Opetope
    node_map: dict
    embed: dict
    edge_map: dict


class TargetResult(NamedTuple):
    result: Opetope
    readdress: dict  # leaves(omega) -> nodes(target)


def target(omega: Opetope) -> Opetope:
    return target_with_readdress(omega).result


def readdress(omega: Opetope) -> dict:
    return target_with_readdress(omega).readdress


def target_with_readdress(omega: Opetope) -> TargetResult:
    """Target and its leaf->node readdressing bijection.

    Conventions: t(arrow) = point, t(degenerate on phi) = Y_phi, and the
    target of a tree is the fold of its decorations under substitution.
    """
    if omega._target is not None:
        return omega._target
    if omega.kind == POINT_KIND:
        raise DimensionTooLow("the point has no target")
    if omega.kind == ARROW_KIND:
        res = TargetResult(point(), {})
    elif omega.kind == DEGEN_KIND:
        root = epsilon(omega.dim - 1)
        res = TargetResult(corolla(omega.of), {root: epsilon(omega.dim - 2)})
    else:
        root = epsilon(omega.dim - 1)
        psi = omega.decoration(root)
        node_map = omega.node_map()
        tau = psi
        # pending: leaves of omega accounted so far -> current node address in tau
        pending = {}
        children = []
        for q in source_addresses(psi):
            child = root.append(q)
            if child in node_map:
                children.append((q, child))
            else:
                pending[child] = q
        # fold child targets into tau one by one, tracking address rewrites
        current = {q: q for q, _ in children}
        for q, child in children:
            sub = _subtree_at(omega, child)
            tau_q, re_q = target_with_readdress(sub)
            subst = substitute_with_maps(tau, current[q], tau_q)
            tau = subst.result
            for leaf in pending:
                pending[leaf] = subst.node_map[pending[leaf]]
            for q2, _ in children:
                if q2 is not q and current[q2] in subst.node_map:
                    current[q2] = subst.node_map[current[q2]]
            for rel_leaf, tq_node in re_q.items():
                pending[child.extend(rel_leaf)] = subst.embed[tq_node]
        res = TargetResult(tau, pending)
    omega._target = res
    return res


def _subtree_at(omega: Opetope, r: Address) -> Opetope:
    """The full subtree of ``omega`` rooted at node ``r`` (relative addresses)."""
    node_map = omega.node_map()
    picked = {}
    for addr, dec in omega.nodes:
        if r.is_prefix_of(addr):
            picked[addr.drop_prefix(r)] = dec
    if not picked:
        raise NotANode(f"{r} is not a node of {omega}")
    return tree(picked)


def substitute(psi: Opetope, r: Address, chi: Opetope) -> Opetope:
    return substitute_with_maps(psi, r, chi).result


def substitute_with_maps(psi: Opetope, r: Address, chi: Opetope) -> SubstResult:
    """Replace node ``r`` of ``psi`` by the tree ``chi`` (t(chi) must equal the
    decoration at ``r``), rewriting the addresses of displaced descendants
    through the readdressing of ``chi``."""
    if psi.kind != TREE_KIND:
        raise NotANode(f"{psi} has no nodes to substitute into")
    dec = psi.decoration(r)
    t_chi = target(chi)
    if t_chi is not dec:
        raise TargetMismatch(
            f"target of replacement is {t_chi}, node decoration is {dec}"
        )
    re_chi = readdress(chi)  # leaves(chi) -> nodes(dec)
    slot_to_leaf = {node: leaf for leaf, node in re_chi.items()}

    def rewrite(addr: Address) -> Address:
        if not r.is_prefix_of(addr) or addr is r:
            return addr
        rest = addr.drop_prefix(r)
        q, tail = rest.path[0], Address(rest.dim, rest.path[1:])
        leaf = slot_to_leaf[q]
        return r.extend(leaf).extend(tail)

    node_map = {}
    new_nodes = {}
    for addr, d in psi.nodes:
        if addr is r:
            continue
        new = rewrite(addr)
        node_map[addr] = new
        new_nodes[new] = d
    embed = {}
    if chi.kind == TREE_KIND:
        for addr, d in chi.nodes:
            new = r.extend(addr)
            embed[addr] = new
            new_nodes[new] = d
    if not new_nodes:
        result = chi  # psi was the single node r and chi is degenerate
    else:
        result = tree(new_nodes)

    edge_map = dict(node_map)
    edge_map[r] = r
    st = structure(psi)
    for e in st.edges:
        if e not in edge_map:
            edge_map[e] = rewrite(e)
    if chi.kind == TREE_KIND:
        for e in structure(chi).edges:
            edge_map.setdefault(r.extend(e), r.extend(e))
    return SubstResult(result, node_map, embed, edge_map)


def graft(omega: Opetope, leaf: Address, other: Opetope) -> Opetope:
    """Attach ``other`` at a leaf of ``omega``; grafting a degenerate tree is
    the identity (the edge decorations must agree either way)."""
    st = structure(omega)
    if leaf not in st.leaves:
        raise NotALeaf(f"{leaf} is not a leaf of {omega}")
    here = st.edges[leaf]
    if other.kind == DEGEN_KIND:
        if other.of is not here:
            raise EdgeMismatch(
                f"degenerate graft edge {other.of} != leaf decoration {here}"
            )
        return omega
    if other.kind != TREE_KIND:
        raise DimensionMismatch("can only graft trees or degenerates")
    other_root_dec = structure(other).edges[epsilon(other.dim - 1)]
    if other_root_dec is not here:
        raise EdgeMismatch(
            f"root edge of grafted tree is {other_root_dec}, leaf wants {here}"
        )
    new_nodes = dict(omega.node_map())
    for addr, dec in other.nodes:
        new_nodes[leaf.extend(addr)] = dec
    return tree(new_nodes)


class ContractResult(NamedTuple):
    result: Opetope
    node_map: dict   # nodes(omega) minus the contracted node -> nodes(result)
    edge_map: dict   # edges(omega) minus the contracted edge -> edges(result)
    region: Opetope  # the two-node subtree that was collapsed


def contract(omega: Opetope, e: Address) -> Opetope:
    return contract_with_maps(omega, e).result


def contract_with_maps(omega: Opetope, e: Address) -> ContractResult:
    """Contract the inner edge ``e``: the two-node subtree around it collapses
    to a single node decorated by its target."""
    st = structure(omega)
    if e not in st.inner_edges:
        raise NotInnerEdge(f"{e} is not an inner edge of {omega}")
    p, q = e.parent, e.last
    node_map = omega.node_map()
    region = tree({epsilon(omega.dim - 1): node_map[p], corolla_addr(q, omega.dim - 1): node_map[e]})
    t_req = target_with_readdress(region)
    re_region = t_req.readdress  # leaves of region (relative) -> nodes of t(region)

    def rewrite(addr: Address) -> Optional[Address]:
        """New address of a node/edge of omega other than the contracted pair."""
        if not p.is_prefix_of(addr) or addr is p:
            return addr
        rest = addr.drop_prefix(p)
        for leaf, node in re_region.items():
            if leaf.is_prefix_of(rest):
                return p.extend(node).extend(rest.drop_prefix(leaf))
        return None

    new_nodes = {p: t_req.result}
    nmap = {p: p}
    for addr, dec in omega.nodes:
        if addr is p or addr is e:
            continue
        new = rewrite(addr)
        assert new is not None, f"node {addr} lost in contraction"
        nmap[addr] = new
        new_nodes[new] = dec
    result = tree(new_nodes)
    emap = {}
    for a in st.edges:
        if a is e:
            continue
        new = rewrite(a)
        if new is not None:
            emap[a] = new
    return ContractResult(result, nmap, emap, region)


def corolla_addr(q: Address, dim: int) -> Address:
    """The length-1 address [q] at the given dimension."""
    return Address(dim, (q,))


class EmbSubtree(NamedTuple):
    """An embedded subtree of some ambient opetope.

    ``root`` is an edge address (the root edge); ``node_set`` is a frozenset of
    node addresses, empty exactly for the degenerate subtree at ``root``.
    """

    root: Address
    node_set: frozenset

    @property
    def is_degenerate(self) -> bool:
        return not self.node_set

    def sort_key(self):
        return (self.root._key, sorted(a._key for a in self.node_set))


class EmbInfo(NamedTuple):
    emb: EmbSubtree
    abstract: Opetope          # the subtree as a standalone opetope
    target: Opetope            # target of the abstract opetope
    leaf_edge_of: dict         # node of target -> absolute edge of the ambient
    rel2abs: dict              # node of abstract -> node of the ambient


def emb_info(omega: Opetope, emb: EmbSubtree) -> EmbInfo:
    cache = _emb_info_cache.setdefault(omega, {})
    got = cache.get(emb)
    if got is not None:
        return got
    if emb.is_degenerate:
        phi = edge_decoration(omega, emb.root)
        abstract = degenerate(phi)
        tau = corolla(phi)
        leaf_edge_of = {epsilon(omega.dim - 2): emb.root}
        info = EmbInfo(emb, abstract, tau, leaf_edge_of, {})
    else:
        picked = {}
        rel2abs = {}
        for addr in emb.node_set:
            rel = addr.drop_prefix(emb.root)
            picked[rel] = omega.decoration(addr)
            rel2abs[rel] = addr
        abstract = tree(picked)
        tres = target_with_readdress(abstract)
        leaf_edge_of = {}
        for leaf, node in tres.readdress.items():
            leaf_edge_of[node] = emb.root.extend(leaf)
        info = EmbInfo(emb, abstract, tres.result, leaf_edge_of, rel2abs)
    cache[emb] = info
    return info


_emb_info_cache: dict = {}


def whole_tree(omega: Opetope) -> EmbSubtree:
    if omega.kind == DEGEN_KIND:
        return EmbSubtree(epsilon(omega.dim - 1), frozenset())
    return EmbSubtree(epsilon(omega.dim - 1),
                      frozenset(a for a, _ in omega.nodes))


def one_node(addr: Address) -> EmbSubtree:
    return EmbSubtree(addr, frozenset((addr,)))


def subtrees(omega: Opetope) -> tuple:
    """All embedded subtrees: one degenerate per edge plus every connected,
    downward-closed-from-its-root node subset."""
    if omega.dim < 2:
        raise DimensionTooLow("subtrees needs dim >= 2")
    if omega._subtrees is not None:
        return omega._subtrees
    st = structure(omega)
    out = [EmbSubtree(e, frozenset()) for e in sorted(st.edges, key=lambda a: a._key)]
    node_map = omega.node_map()

    def grow(addr: Address) -> list:
        """Node sets of subtrees rooted at ``addr``."""
        child_opts = []
        for q in source_addresses(node_map[addr]):
            c = addr.append(q)
            if c in node_map:
                child_opts.append([frozenset()] + grow(c))
        sets = [frozenset((addr,))]
        for opts in child_opts:
            sets = [s | extra for s in sets for extra in opts]
        return sets

    for root in st.nodes:
        for node_set in grow(root):
            out.append(EmbSubtree(root, node_set))
    out.sort(key=lambda e: e.sort_key())
    res = tuple(out)
    omega._subtrees = res
    return res


def linear(phi: Opetope, i: int) -> Opetope:
    """The linear tree with ``i`` nodes all decorated by Y_phi (degenerate on
    phi when ``i`` is zero)."""
    if i < 0:
        raise DimensionMismatch("node count must be >= 0")
    if i == 0:
        return degenerate(phi)
    y = corolla(phi)
    slot = epsilon(phi.dim)          # the single source address of Y_phi
    dim = phi.dim + 1                # node addresses of the result
    nodes = {}
    addr = epsilon(dim)
    for _ in range(i):
        nodes[addr] = y
        addr = addr.append(slot)
    return tree(nodes)


def opt_int(k: int) -> Opetope:
    """The linear 2-opetope with ``k`` nodes (the simplex [k] under n=1)."""
    return linear(point(), k)


def unit_opetope(m: int) -> Opetope:
    """The iterated corolla: point, arrow, Y(arrow), ... at dimension m."""
    if m == 0:
        return point()
    if m == 1:
        return arrow()
    return corolla(unit_opetope(m - 1))


# -- enumeration ----------------------------------------------------------------

def enumerate_opetopes(universe: Iterable[Opetope], max_nodes: int,
                       degenerate_bases: Iterable[Opetope] = ()) -> list:
    """All trees with <= max_nodes nodes decorated from ``universe`` (plus the
    degenerates on ``degenerate_bases``), deterministically ordered."""
    universe = sorted(set(universe))
    by_target: dict = {}
    for psi in universe:
        by_target.setdefault(target(psi), []).append(psi)
    dims = {psi.dim for psi in universe}
    if len(dims) != 1:
        raise DimensionMismatch("universe must be of a single dimension")
    (n,) = dims
    out = [degenerate(phi) for phi in sorted(set(degenerate_bases))]

    def forests(slots: list, budget: int) -> Iterator[dict]:
        """Assign child subtrees (or leaves) to (address, required face) slots."""
        if not slots:
            yield {}
            return
        (addr, face), rest = slots[0], slots[1:]
        for tail in forests(rest, budget):
            used = sum(len(s) for s in tail.values())
            yield dict(tail)
            for psi in by_target.get(face, ()):
                for sub in grown(psi, budget - used - 1):
                    m = dict(tail)
                    m[addr] = sub
                    yield m

    def grown(psi: Opetope, budget: int) -> Iterator[list]:
        """Subtrees (as relative (addr, dec) lists) with root decorated psi."""
        if budget < 0:
            return
        root = epsilon(n)
        slots = [(root.append(q), source_face(psi, q))
                 for q in source_addresses(psi)]
        for assign in forests(slots, budget):
            nodes = [(root, psi)]
            for addr, sub in assign.items():
                for a, d in sub:
                    nodes.append((addr.extend(a), d))
            yield nodes

    seen = set()
    for psi in universe:
        for nodes in grown(psi, max_nodes - 1):
            op = tree(dict(nodes))
            if op not in seen:
                seen.add(op)
                out.append(op)
    out.sort()
    return out


def default_universe(n: int, d: int) -> tuple:
    """Default finite decoration universe for (n+1)-dimensional trees."""
    if n < 1:
        raise DimensionTooLow("need n >= 1")
    if n == 1:
        return (arrow(),)
    if n == 2:
        return tuple(opt_int(k) for k in range(d + 1))
    if n == 3:
        univ = {degenerate(arrow())}
        for k in range(d + 1):
            univ.add(corolla(opt_int(k)))
        for i in range(d + 1):
            univ.add(linear(arrow(), i))
        return tuple(sorted(univ))
    raise DimensionTooLow(f"no default universe beyond n=3 (got n={n})")


def default_degenerate_bases(n: int, d: int) -> tuple:
    """(n-1)-opetopes whose degenerates are included in Lambda truncations."""
    if n == 1:
        return (point(),)
    if n == 2:
        return (arrow(),)
    if n == 3:
        return tuple(opt_int(k) for k in range(d + 1))
    raise DimensionTooLow(f"no default degenerate bases beyond n=3 (got n={n})")
