"""Module for the level-by-level corona construction."""

import logging
import math
from dataclasses import dataclass
from typing import NoReturn

import numpy as np

from ..exceptions import MeasureConstructionStuckError, ScaleBelowResolutionError
from ..geometry import Ball, convex_hull
from ..models.constants import GOOD_BALL_FRACTION
from ..models.corona import BallKind, BallStatus, CoronaVariant, LemmaCheck
from ..utils.parallel import parallel_map
from .nets import filter_net, lemma_check, select_net
from .stopping import (
    ScaleField,
    StoppingMixin,
    cell_representatives,
    split_field,
)
from .tree import CoronaBall, CoronaMeasure

logger = logging.getLogger("wiggly-continua.corona")

_PAIR_BLOCK = 512


def local_measure(t: np.ndarray, mass: float = 1.0) -> np.ndarray:
    """
    Split a ball's mass between its children in proportion to their radii.

    Raises:
        ValueError: If there is no child or a radius is not positive
    """
    t = np.asarray(t, dtype=float)
    if t.size == 0 or np.any(t <= 0):
        error_msg = "local measure needs at least one child of positive radius"
        raise ValueError(error_msg)
    return mass * t / math.fsum(t)


def spread_mass(weights: np.ndarray, mass: float) -> np.ndarray:
    """Distribute a leaf's mass over its atoms, uniformly if all weights vanish."""
    weights = np.asarray(weights, dtype=float)
    total = math.fsum(weights)
    if total <= 0:
        return np.full(len(weights), mass / len(weights))
    return mass * weights / total


@dataclass(frozen=True)
class _Plan:
    variant: CoronaVariant
    budget: float
    epsilon: float
    lemma_constant: float
    porosity_epsilon: float | None


@dataclass(frozen=True, eq=False)
class _Expansion:
    status: BallStatus
    kind: BallKind | None = None
    lemma: LemmaCheck | None = None
    uniform: bool = False
    centers: np.ndarray | None = None
    t: np.ndarray | None = None
    atoms: np.ndarray | None = None


class MeasureMixin(StoppingMixin):
    """Mixin for seed balls and the corona measure construction."""

    def find_seed_ball(self, eps: float | None = None) -> Ball:
        """
        A ball around a W-tagged point whose E-weight is below ε·R.

        Radii run through diameter·2^-j, j = 1, 2, ... down to the resolution
        floor; at each radius W points are scanned one per cell of side R/2.
        When no ball qualifies the least E-dense ball seen is returned.

        Raises:
            ValueError: If the sample has no W-tagged point
        """
        eps = self.corona_config.epsilon if eps is None else eps
        w_idx = np.flatnonzero(self.sample.w_mask)
        if w_idx.size == 0:
            error_msg = "the avoiding construction needs W-tagged points"
            raise ValueError(error_msg)
        w_pts = self.sample.points[w_idx]

        radius = self.sample.diameter / 2.0
        best: tuple[float, Ball] | None = None
        while radius >= self.min_scale:
            reps, _ = cell_representatives(w_pts, radius / 2.0)
            for center in w_pts[reps]:
                idx = self.sample.ball_indices(center, radius)
                e_mass = math.fsum(self.sample.e_weight[idx])
                if e_mass < eps * radius:
                    ball = Ball.around(center, radius)
                    logger.info(f"Seed ball {ball} with E-weight {e_mass:.3g}")
                    return ball
                if best is None or e_mass / radius < best[0]:
                    best = (e_mass / radius, Ball.around(center, radius))
            radius /= 2.0

        if best is None:
            return Ball.around(
                w_pts[0], max(self.sample.diameter, self.sample.resolution)
            )
        logger.warning(
            f"No ball has E-density below {eps:g}; seeding at {best[1]} "
            f"with E-density {best[0]:.3g}"
        )
        return best[1]

    def diameter_seed_ball(self) -> Ball:
        """D(x₀, diam K) for an endpoint x₀ of a diameter of the sample."""
        pts = self.sample.points
        candidates = convex_hull(pts) if self.sample.ambient_dim == 2 else pts
        if len(candidates) < 2:
            return Ball.around(candidates[0], self.sample.resolution)
        best, pair = -1.0, (0, 0)
        for start in range(0, len(candidates), _PAIR_BLOCK):
            block = candidates[start : start + _PAIR_BLOCK]
            dist = np.linalg.norm(block[:, None, :] - candidates[None, :, :], axis=-1)
            k = int(np.argmax(dist))
            if dist.flat[k] > best:
                best = float(dist.flat[k])
                pair = (start + k // len(candidates), k % len(candidates))
        a, b = candidates[pair[0]], candidates[pair[1]]
        x0 = a if tuple(a) <= tuple(b) else b
        return Ball.around(x0, best)

    def _plan(
        self,
        variant: CoronaVariant | str | None,
        budget: float | None,
        eps: float | None,
    ) -> _Plan:
        config = self.corona_config
        variant = config.variant if variant is None else CoronaVariant(variant)
        porosity_eps = None
        if variant is CoronaVariant.NONPOROUS:
            porosity_eps = config.resolved_porosity_epsilon(self.multiscale_config.lam)
        return _Plan(
            variant=variant,
            budget=self._check_budget(budget),
            epsilon=config.epsilon if eps is None else eps,
            lemma_constant=config.lemma_constant,
            porosity_epsilon=porosity_eps,
        )

    def _uniform_field(self, ball: Ball, eps: float) -> ScaleField:
        idx = self._ball_indices(ball)
        reps, owner = cell_representatives(
            self.sample.points[idx], 0.5 * self.min_scale
        )
        t = eps * ball.radius
        value = t if t >= self.min_scale else 0.0
        return ScaleField(
            ball=ball,
            indices=idx,
            representatives=reps,
            owner=owner,
            t=np.full(len(idx), value),
            uniform=True,
        )

    def _porous_around(self, ball: Ball, eps: float) -> bool:
        try:
            probe = self.porosity_probe(ball.center_array, 2.0 * ball.radius, eps)
        except ScaleBelowResolutionError:
            return True
        return probe.porous

    def _w_atoms(self, field_indices: np.ndarray) -> np.ndarray:
        return field_indices[self.sample.w_mask[field_indices]]

    def _stuck(
        self, node: CoronaBall, reason: str, **details: object
    ) -> NoReturn:
        diagnostics = {
            "center": list(node.ball.center),
            "radius": node.ball.radius,
            "level": node.level,
            **details,
        }
        error_msg = f"measure construction stuck at {node.ball}: {reason}"
        raise MeasureConstructionStuckError(error_msg, diagnostics)

    def _expand(self, node: CoronaBall, plan: _Plan) -> _Expansion:
        ball = node.ball
        avoiding = plan.variant is not CoronaVariant.UNIVERSAL
        field: ScaleField | None = None
        if plan.porosity_epsilon is not None and not self._porous_around(
            ball, plan.porosity_epsilon
        ):
            field = self._uniform_field(ball, plan.porosity_epsilon)
        if field is None:
            field = self.stopping_scales(ball, plan.budget)
        split = split_field(self, field)
        kind: BallKind | None = None

        if not avoiding:
            if split.z_length >= GOOD_BALL_FRACTION * ball.radius:
                return _Expansion(status="good", kind="good", atoms=split.z)
            kind = "bad"

        reps = field.representatives
        t_reps = field.representative_t
        pts = self.sample.points[field.indices[reps]]
        inside = np.linalg.norm(pts - ball.center_array, axis=1) + t_reps <= (
            ball.radius * (1.0 + 1e-12)
        )
        usable = (t_reps > 0) & inside
        if not np.any(usable):
            if avoiding:
                atoms = self._w_atoms(field.indices)
                if atoms.size == 0:
                    self._stuck(node, "no net point and no W point")
                status: BallStatus = "flat" if split.w.size == 0 else "unresolved"
                return _Expansion(status=status, uniform=field.uniform, atoms=atoms)
            self._stuck(
                node,
                "Z(B) is too light and no stopping ball fits inside B",
                z_length=split.z_length,
                w_points=int(split.w.size),
            )

        cand_pts, cand_t = pts[usable], t_reps[usable]
        net = select_net(cand_pts, cand_t)
        net_pts, net_t = cand_pts[net], cand_t[net]
        if avoiding:
            flt = filter_net(
                net_pts,
                net_t,
                self.sample,
                plan.epsilon,
                ball.radius,
                plan.lemma_constant,
                require_w=True,
            )
            lemma = flt.check
            net_pts, net_t = net_pts[flt.kept], net_t[flt.kept]
            if net_t.size == 0:
                logger.warning(
                    f"Net filter removed every ball inside {ball}; "
                    "keeping it as an unresolved leaf"
                )
                return _Expansion(
                    status="unresolved",
                    lemma=lemma,
                    uniform=field.uniform,
                    atoms=self._w_atoms(field.indices),
                )
        else:
            lemma = lemma_check(
                net_t,
                np.zeros(len(net_t)),
                0,
                ball.radius,
                plan.epsilon,
                plan.lemma_constant,
            )
        return _Expansion(
            status="expanded",
            kind=kind,
            lemma=lemma,
            uniform=field.uniform,
            centers=net_pts,
            t=net_t,
        )

    def build_corona(
        self,
        variant: CoronaVariant | str | None = None,
        budget: float | None = None,
        eps: float | None = None,
        n_max: int | None = None,
        seed_ball: Ball | None = None,
    ) -> CoronaMeasure:
        """
        Build the corona measure level by level.

        Each ball of the current family is replaced by the balls D(x, t_B(x))
        of a filtered covering net of W(B), and its mass is split between
        them in proportion to t. In the universal variant balls whose flat
        part Z(B) has length at least R_B/100 are good and become leaves
        carrying their mass on Z(B). Balls that cannot be refined further
        become leaves; leaves spread their mass over sample points weighted
        by local spacing (W points only, outside the universal variant).

        Args:
            variant: Construction variant (defaults to the configured one)
            budget: Wiggliness budget M
            eps: E-density parameter ε
            n_max: Depth of the tree
            seed_ball: Root ball (defaults to a diameter ball for the
                universal variant and to ``find_seed_ball`` otherwise)

        Returns:
            The finished construction

        Raises:
            MeasureConstructionStuckError: If a ball has neither a usable net
                nor a place to put its mass
            ValueError: If a parameter is out of range
        """
        plan = self._plan(variant, budget, eps)
        n_max = self.corona_config.n_max if n_max is None else n_max
        if n_max < 0:
            error_msg = "n_max must be non-negative"
            raise ValueError(error_msg)
        if seed_ball is None:
            seed_ball = (
                self.diameter_seed_ball()
                if plan.variant is CoronaVariant.UNIVERSAL
                else self.find_seed_ball(plan.epsilon)
            )
        logger.info(
            f"Building {plan.variant.value} corona from {seed_ball}, "
            f"M = {plan.budget:.4g}, depth {n_max}"
        )

        root = CoronaBall(ball=seed_ball, level=0, mass=1.0)
        atoms: dict[int, np.ndarray] = {}
        frontier = [root]
        for level in range(n_max):
            if not frontier:
                break
            expansions = parallel_map(lambda node: self._expand(node, plan), frontier)
            following: list[CoronaBall] = []
            for node, expansion in zip(frontier, expansions, strict=True):
                node.status = expansion.status
                node.kind = expansion.kind
                node.lemma = expansion.lemma
                node.uniform_scales = expansion.uniform
                if expansion.centers is None or expansion.t is None:
                    if expansion.atoms is not None:
                        atoms[id(node)] = expansion.atoms
                    continue
                masses = local_measure(expansion.t, node.mass)
                for center, t, mass in zip(
                    expansion.centers, expansion.t, masses, strict=True
                ):
                    child = CoronaBall(
                        ball=Ball.around(center, float(t)),
                        level=level + 1,
                        mass=float(mass),
                        parent=node,
                    )
                    node.children.append(child)
                    following.append(child)
            logger.info(
                f"Level {level + 1}: {len(following)} balls from "
                f"{len(frontier)} parents"
            )
            frontier = following

        return self._assemble(root, atoms, plan, n_max)

    def _assemble(
        self,
        root: CoronaBall,
        atoms: dict[int, np.ndarray],
        plan: _Plan,
        n_max: int,
    ) -> CoronaMeasure:
        points: list[np.ndarray] = []
        masses: list[np.ndarray] = []
        e_weight: list[np.ndarray] = []
        owners: list[np.ndarray] = []
        leaves = [node for node in root.walk() if node.is_leaf]
        for position, leaf in enumerate(leaves):
            idx = atoms.get(id(leaf))
            if idx is None:
                idx = self._ball_indices(leaf.ball)
                if plan.variant is not CoronaVariant.UNIVERSAL:
                    idx = self._w_atoms(idx)
            if idx.size == 0:
                self._stuck(leaf, "leaf without admissible atoms")
            points.append(self.sample.points[idx])
            masses.append(spread_mass(self.sample.length_weights[idx], leaf.mass))
            e_weight.append(self.sample.e_weight[idx])
            owners.append(np.full(len(idx), position, dtype=np.int64))

        measure = CoronaMeasure(
            root=root,
            variant=plan.variant,
            budget=plan.budget,
            epsilon=plan.epsilon,
            n_max=n_max,
            lam=self.multiscale_config.lam,
            atom_points=np.vstack(points),
            atom_masses=np.concatenate(masses),
            atom_e_weight=np.concatenate(e_weight),
            atom_leaf=np.concatenate(owners),
        )
        logger.info(
            f"Corona measure: {len(measure.balls)} balls, {len(leaves)} leaves, "
            f"{len(measure.atom_masses)} atoms"
        )
        return measure
