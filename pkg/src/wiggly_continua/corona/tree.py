"""Ball trees produced by the corona construction and the measures they carry."""

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.spatial import cKDTree

from ..geometry import Ball
from ..models.corona import (
    BallKind,
    BallStatus,
    CoronaBallModel,
    CoronaTreeModel,
    CoronaVariant,
    LemmaCheck,
)

MASS_TOLERANCE = 1e-12


@dataclass(eq=False)
class CoronaBall:
    """
    One ball of the family at some level, with the mass it carries.

    ``uniform_scales`` marks balls whose children were cut at the common
    radius ε′R of the nonporous variant rather than at stopping scales.
    """

    ball: Ball
    level: int
    mass: float
    parent: "CoronaBall | None" = field(default=None, repr=False)
    kind: BallKind | None = None
    status: BallStatus = "depth"
    lemma: LemmaCheck | None = None
    uniform_scales: bool = False
    children: list["CoronaBall"] = field(default_factory=list, repr=False)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def walk(self) -> Iterator["CoronaBall"]:
        """Pre-order traversal, children in construction order."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def to_model(self) -> CoronaBallModel:
        return CoronaBallModel(
            center=list(self.ball.center),
            radius=self.ball.radius,
            level=self.level,
            mass=self.mass,
            kind=self.kind,
            status=self.status,
            lemma=self.lemma,
            children=[child.to_model() for child in self.children],
        )


@dataclass(eq=False)
class CoronaMeasure:
    """
    A finished construction: the ball tree and the atoms on its leaves.

    Atoms are sample points; ``atom_e_weight`` holds the E-weight of the
    sample point under each atom and ``atom_leaf`` the position of its leaf
    in ``leaves``.
    """

    root: CoronaBall
    variant: CoronaVariant
    budget: float
    epsilon: float
    n_max: int
    lam: float
    atom_points: np.ndarray
    atom_masses: np.ndarray
    atom_e_weight: np.ndarray
    atom_leaf: np.ndarray

    @cached_property
    def balls(self) -> list[CoronaBall]:
        return list(self.root.walk())

    @cached_property
    def leaves(self) -> list[CoronaBall]:
        return [b for b in self.balls if b.is_leaf]

    @property
    def depth(self) -> int:
        return max(b.level for b in self.balls)

    @property
    def root_radius(self) -> float:
        return self.root.ball.radius

    @cached_property
    def _atom_tree(self) -> cKDTree:
        return cKDTree(self.atom_points)

    def query(self, x: np.ndarray, r: float) -> float:
        """μ(B(x, r)): the mass of the atoms in the closed ball."""
        idx = sorted(
            self._atom_tree.query_ball_point(
                np.asarray(x, dtype=float), r * (1.0 + 1e-12)
            )
        )
        return math.fsum(self.atom_masses[idx])

    def bracket(self, x: np.ndarray, r: float) -> tuple[float, float]:
        """
        Leaf-granularity bounds on μ(B(x, r)).

        Returns:
            (mass of the leaves inside the ball, mass of the leaves meeting it)
        """
        x = np.asarray(x, dtype=float)
        centers = np.array([leaf.ball.center for leaf in self.leaves])
        radii = np.array([leaf.ball.radius for leaf in self.leaves])
        masses = np.array([leaf.mass for leaf in self.leaves])
        gap = np.linalg.norm(centers - x, axis=1)
        inside = gap + radii <= r * (1.0 + 1e-12)
        meeting = gap <= r + radii
        return math.fsum(masses[inside]), math.fsum(masses[meeting])

    def levels(self, n: int) -> list[CoronaBall]:
        """
        The family at level n.

        Leaves created above level n stay in the family, so that every level
        carries the whole mass.
        """
        return [
            b
            for b in self.balls
            if b.level == n or (b.level < n and b.is_leaf)
        ]

    def level_mass(self, n: int) -> float:
        return math.fsum(b.mass for b in self.levels(n))

    def check_invariants(self, enforce_collapse: bool = False) -> None:
        """
        Verify the structural properties of the tree.

        Checks mass conservation per level and per parent, nesting of
        children in their parent, disjointness within each level and between
        each new ball and the other balls of the previous level, and that
        atoms carry no E-weight in the avoiding variant. With
        ``enforce_collapse`` every child cut at a stopping scale must have
        radius at most e^(-M) times its parent's.

        Raises:
            AssertionError: On the first violated property
        """
        for n in range(self.depth + 1):
            mass = self.level_mass(n)
            if abs(mass - 1.0) > MASS_TOLERANCE:
                error_msg = f"level {n} carries mass {mass!r}, expected 1"
                raise AssertionError(error_msg)

        collapse = math.exp(-self.budget)
        for node in self.balls:
            if node.is_leaf:
                continue
            total = math.fsum(child.mass for child in node.children)
            if abs(total - node.mass) > MASS_TOLERANCE:
                error_msg = (
                    f"children of the level-{node.level} ball at {node.ball.center} "
                    f"carry {total!r} instead of {node.mass!r}"
                )
                raise AssertionError(error_msg)
            for child in node.children:
                if not node.ball.contains_ball(child.ball):
                    error_msg = f"child {child.ball} leaves its parent {node.ball}"
                    raise AssertionError(error_msg)
                if (
                    enforce_collapse
                    and not node.uniform_scales
                    and child.ball.radius > collapse * node.ball.radius * (1 + 1e-9)
                ):
                    error_msg = (
                        f"child radius {child.ball.radius:.6g} exceeds "
                        f"{collapse:.3g} x parent radius {node.ball.radius:.6g}"
                    )
                    raise AssertionError(error_msg)

        for n in range(self.depth + 1):
            family = self.levels(n)
            _assert_pairwise_disjoint(family, n)
            if n > 0:
                newcomers = [b for b in family if b.level == n]
                _assert_disjoint_from_uncles(newcomers, self.levels(n - 1), n)

        if self.variant is CoronaVariant.AVOIDING:
            e_mass = math.fsum(self.atom_e_weight)
            if e_mass != 0.0:
                error_msg = f"atoms carry E-weight {e_mass!r}"
                raise AssertionError(error_msg)

    def to_model(self) -> CoronaTreeModel:
        return CoronaTreeModel(
            variant=self.variant,
            budget=self.budget,
            epsilon=self.epsilon,
            n_max=self.n_max,
            depth=self.depth,
            ball_count=len(self.balls),
            atom_count=len(self.atom_masses),
            atom_e_weight=math.fsum(self.atom_e_weight),
            lemma_failures=sum(
                1 for b in self.balls if b.lemma is not None and not b.lemma.passed
            ),
            root=self.root.to_model(),
        )

    def atom_rows(self) -> list[tuple[float, ...]]:
        """(x, y, ..., mass) per atom."""
        return [
            (*(float(c) for c in point), float(mass))
            for point, mass in zip(self.atom_points, self.atom_masses, strict=True)
        ]


def _centres_and_radii(balls: list[CoronaBall]) -> tuple[np.ndarray, np.ndarray]:
    return (
        np.array([b.ball.center for b in balls], dtype=float),
        np.array([b.ball.radius for b in balls], dtype=float),
    )


def _assert_pairwise_disjoint(balls: list[CoronaBall], level: int) -> None:
    if len(balls) < 2:
        return
    centers, radii = _centres_and_radii(balls)
    pairs = cKDTree(centers).query_pairs(2.0 * float(radii.max()))
    for i, j in sorted(pairs):
        if not balls[i].ball.is_disjoint(balls[j].ball):
            error_msg = (
                f"balls {balls[i].ball} and {balls[j].ball} of level {level} overlap"
            )
            raise AssertionError(error_msg)


def _assert_disjoint_from_uncles(
    newcomers: list[CoronaBall], previous: list[CoronaBall], level: int
) -> None:
    if not newcomers or not previous:
        return
    centers, radii = _centres_and_radii(previous)
    tree = cKDTree(centers)
    reach = float(radii.max())
    for child in newcomers:
        hits = tree.query_ball_point(
            child.ball.center_array, child.ball.radius + reach
        )
        for i in sorted(hits):
            other = previous[i]
            if other is child.parent:
                continue
            if not other.ball.is_disjoint(child.ball):
                error_msg = (
                    f"level-{level} ball {child.ball} meets {other.ball}, "
                    "which is not its parent"
                )
                raise AssertionError(error_msg)


def measure_query(measure: CoronaMeasure, x: np.ndarray, r: float) -> float:
    """μ(B(x, r)) for a finished construction."""
    return measure.query(x, r)


def measure_bracket(
    measure: CoronaMeasure, x: np.ndarray, r: float
) -> tuple[float, float]:
    """Inner and outer leaf-mass bounds on μ(B(x, r))."""
    return measure.bracket(x, r)
