# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" Continuation of twistor lines from the nilpotent cone to a fiber.

A line T is moved along a path s(tau), tau in [0, 1], of invariant
sections by Gauss-Newton with minimal norm updates, computed in the real
``su_basis`` coordinates of T so that every iterate stays real. The
G-orbit directions in the fiber are left to the minimal norm solve.

"""
import logging

import attr
import numpy as np
from scipy import linalg

from orbitwistor import metric_engine, serializers, su3_witness, workers
from orbitwistor import twistor_sections as ts
from orbitwistor.constants import (
    DEFAULT_MAX_NEWTON_ITERS, DEFAULT_MIN_P1, DEFAULT_NEWTON_TOL,
    DEFAULT_STEPS, DEFINITE_NEGATIVE, DEFINITE_POSITIVE, INDEFINITE, LINEAR,
    PATHS, UNKNOWN, WEIGHTED,
)
from orbitwistor.errors import (
    DimensionError, DomainError, NoConvergence, NotRegular, OrbitwistorError,
    PathSingular,
)
from orbitwistor.lie_core import commuting_triple, random_special_unitary

logger = logging.getLogger('orbitwistor.continuation')

# halvings of a Gauss-Newton step before it is rejected
MAX_BACKTRACKS = 12
# interpolation points on a connection attempt
CONNECTION_POINTS = 8


def _positive(instance, attribute, value):
    if not value > 0:
        raise OrbitwistorError(
            '{} must be positive, got {}'.format(attribute.name, value)
        )


def _known_path(instance, attribute, value):
    if value not in PATHS:
        raise OrbitwistorError(
            'path must be one of {}, got "{}"'.format(PATHS, value)
        )


@attr.s(frozen=True)
class ContinuationConfig(object):
    steps = attr.ib(default=DEFAULT_STEPS, validator=_positive)
    newton_tol = attr.ib(default=DEFAULT_NEWTON_TOL, validator=_positive)
    max_newton_iters = attr.ib(
        default=DEFAULT_MAX_NEWTON_ITERS, validator=_positive,
    )
    min_p1 = attr.ib(default=DEFAULT_MIN_P1, validator=_positive)
    path = attr.ib(default=WEIGHTED, validator=_known_path)


@attr.s(frozen=True, eq=False)
class Sample(object):
    index = attr.ib()
    origin = attr.ib()
    triple = attr.ib()
    component = attr.ib()
    signature = attr.ib()
    eigenvalues = attr.ib()


@attr.s(frozen=True, eq=False)
class ComponentReport(object):
    target = attr.ib()
    samples = attr.ib()
    counts = attr.ib()
    representatives = attr.ib()
    edges = attr.ib()
    failures = attr.ib()

    def as_document(self):
        return {
            "target": serializers.encode_invariant(self.target),
            "counts": self.counts,
            "representatives": self.representatives,
            "samples": [
                {
                    "index": sample.index,
                    "origin": sample.origin,
                    "class": sample.component,
                    "signature": list(sample.signature),
                    "eigenvalues": sample.eigenvalues,
                    "triple": serializers.encode_triple(sample.triple),
                }
                for sample in self.samples
            ],
            "edges": [list(edge) for edge in self.edges],
            "failures": [
                {"index": index, "error": message}
                for index, message in self.failures
            ],
        }

    @classmethod
    def from_document(cls, doc):
        samples = [
            Sample(
                index=int(item["index"]),
                origin=item["origin"],
                triple=serializers.decode_triple(item["triple"]),
                component=item["class"],
                signature=tuple(int(x) for x in item["signature"]),
                eigenvalues=np.array(item["eigenvalues"], dtype=float),
            )
            for item in doc["samples"]
        ]
        return cls(
            target=serializers.decode_invariant(doc["target"]),
            samples=samples,
            counts={key: int(value) for key, value in doc["counts"].items()},
            representatives={
                key: int(value)
                for key, value in doc["representatives"].items()
            },
            edges=[tuple(edge) for edge in doc["edges"]],
            failures=[
                (int(item["index"]), item["error"])
                for item in doc["failures"]
            ],
        )


def cone_seed(n):
    """ The real line of A(zeta) = e - h zeta - f zeta^2, lying over s = 0.

    """
    if n < 2:
        raise DimensionError('cone seed needs n >= 2, got {}'.format(n))
    return ts.triple_from_section(ts.cone_section(n))


def classify(signature):
    n_plus, n_zero, n_minus = signature
    if n_zero:
        return UNKNOWN
    if n_plus and n_minus:
        return INDEFINITE
    return DEFINITE_POSITIVE if n_plus else DEFINITE_NEGATIVE


def _path(start, target, path):
    if path == WEIGHTED:
        def section(tau):
            return ts.InvariantSection.from_vector(
                target.n,
                ts.weighted_scale(start, 1.0 - tau).vector()
                + ts.weighted_scale(target, tau).vector(),
            )
    else:
        def section(tau):
            return ts.InvariantSection.from_vector(
                target.n,
                (1.0 - tau) * start.vector() + tau * target.vector(),
            )
    return section


def _newton(t, target, cfg, tau=1.0):
    """ Gauss-Newton on pi(A_T) = target. Returns (triple, updated). """
    tolerance = cfg.newton_tol * max(1.0, target.norm())
    n = t.n
    x = ts.triple_to_vector(t)
    current = t
    updated = False

    for iteration in range(cfg.max_newton_iters + 1):
        F = ts.residual_vector(current, target)
        residual = float(np.abs(F).max())
        if residual <= tolerance:
            return current, updated
        if iteration == cfg.max_newton_iters:
            break

        J = ts.real_jacobian(current)
        delta, _, _, _ = linalg.lstsq(J, -F)

        step = 1.0
        for _ in range(MAX_BACKTRACKS):
            candidate = ts.vector_to_triple(n, x + step * delta)
            trial = float(np.abs(ts.residual_vector(candidate, target)).max())
            if trial < residual:
                break
            step /= 2
        else:
            raise NoConvergence(
                'no descent at tau = {:.4g}, residual {:.3g}'.format(
                    tau, residual), t=tau, residual=residual,
            )

        x = x + step * delta
        current = candidate
        updated = True
        logger.debug(
            'tau %.4g iteration %s residual %.3g', tau, iteration, trial,
        )

    raise NoConvergence(
        'Gauss-Newton did not converge at tau = {:.4g}, residual {:.3g}'
        .format(tau, residual), t=tau, residual=residual,
    )


def _check_target(seed, target):
    if target.n != seed.n:
        raise DimensionError(
            'target is for sl({}), line is in sl({})'.format(target.n, seed.n)
        )
    if not target.is_real():
        raise DomainError('target invariant section is not real')


def continue_line(seed, target, cfg=None):
    """ Follow ``seed`` along a path of invariant sections to ``target``.

    Raises ``PathSingular`` as soon as the p1 ratio of an accepted point
    drops below ``cfg.min_p1``, with the path parameter of that point.

    """
    cfg = ContinuationConfig() if cfg is None else cfg
    _check_target(seed, target)
    if not ts.is_regular_twistor_line(seed):
        reason = ''
        if commuting_triple(seed.matrices):
            reason = ' (the seed triple commutes)'
        raise NotRegular(
            'continuation must start at a regular line' + reason
        )

    start = ts.adjoint_quotient(ts.make_section(seed))
    section = _path(start, target, cfg.path)
    current, moved = seed, False

    for step in range(1, cfg.steps + 1):
        tau = step / cfg.steps
        current, updated = _newton(current, section(tau), cfg, tau)
        moved = moved or updated
        ratio = ts.p1_ratio(ts.make_section(current))
        if ratio < cfg.min_p1:
            raise PathSingular(
                'line left the regular locus at tau = {:.4g} '
                '(p1 ratio {:.3g})'.format(tau, ratio),
                t=tau, p1_ratio=ratio,
            )

    return current if moved else seed


def project_to_fiber(t, target, cfg=None):
    cfg = ContinuationConfig() if cfg is None else cfg
    _check_target(t, target)
    projected, _ = _newton(t, target, cfg)
    return projected


def _cone_start(n, rng):
    g = random_special_unitary(n, rng)
    seed = ts.conjugate_triple(g, cone_seed(n))
    seed = ts.scale_triple(seed, rng.uniform(0.5, 2.0))
    if rng.random() < 0.5:
        seed = ts.negate_triple(seed)
    return seed


def _sample(target, cfg, item):
    index, rng, start = item
    n = target.n
    try:
        if start is not None:
            origin = "start"
            line = continue_line(start, target, attr.evolve(cfg, path=LINEAR))
        elif index % 2 == 0:
            origin = "cone"
            line = continue_line(_cone_start(n, rng), target, cfg)
        else:
            origin = "d2"
            line = continue_line(
                su3_witness.d2_sample(n, rng, scale=target.norm() ** 0.5),
                target, attr.evolve(cfg, path=LINEAR),
            )
    except OrbitwistorError as exc:
        logger.warning('sample %s failed: %s', index, exc)
        return index, str(exc)

    try:
        report = metric_engine.metric_gram(line)
    except OrbitwistorError as exc:
        logger.warning('sample %s: no metric: %s', index, exc)
        return Sample(
            index=index, origin=origin, triple=line, component=UNKNOWN,
            signature=(0, 0, 0), eigenvalues=np.array([]),
        )

    return Sample(
        index=index,
        origin=origin,
        triple=line,
        component=classify(report.signature),
        signature=report.signature,
        eigenvalues=report.eigenvalues,
    )


def _connect(target, cfg, pair):
    """ Join two lines by projecting points of the segment between them. """
    first, second = pair
    n = target.n
    u = ts.triple_to_vector(first.triple)
    v = ts.triple_to_vector(second.triple)
    previous = first.triple
    for j in range(1, CONNECTION_POINTS):
        lam = j / CONNECTION_POINTS
        guess = ts.vector_to_triple(n, (1 - lam) * u + lam * v)
        try:
            previous, _ = _newton(guess, target, cfg, lam)
        except NoConvergence:
            return None
        if ts.p1_ratio(ts.make_section(previous)) < cfg.min_p1:
            return None
    return first.index, second.index


def explore_components(target, samples, seed, cfg=None, starts=None,
                       connect=True):
    """ Census of the components of the regular lines over ``target``.

    Even samples start at conjugated, rescaled and possibly negated cone
    seeds; odd samples start at random lines on D2. Explicit ``starts``
    replace the first samples. Lines of equal class are joined to their
    class representative when a projected segment stays regular; a
    missing edge is no evidence of disconnection.

    """
    cfg = ContinuationConfig() if cfg is None else cfg
    starts = list(starts or [])
    streams = workers.sample_streams(seed, samples)
    items = [
        (index, rng, starts[index] if index < len(starts) else None)
        for index, rng in enumerate(streams)
    ]

    outcomes = workers.sample_map(lambda item: _sample(target, cfg, item),
                                  items)

    found, failures = [], []
    for outcome in outcomes:
        if isinstance(outcome, Sample):
            found.append(outcome)
        else:
            failures.append(outcome)

    counts = {name: 0 for name in (
        DEFINITE_POSITIVE, DEFINITE_NEGATIVE, INDEFINITE, UNKNOWN)}
    representatives = {}
    for sample in found:
        counts[sample.component] += 1
        representatives.setdefault(sample.component, sample.index)

    edges = []
    if connect:
        by_index = {sample.index: sample for sample in found}
        pairs = [
            (by_index[representatives[sample.component]], sample)
            for sample in found
            if sample.component != UNKNOWN
            and sample.index != representatives[sample.component]
        ]
        joined = workers.sample_map(
            lambda pair: _connect(target, cfg, pair), pairs,
        )
        edges = [edge for edge in joined if edge is not None]

    logger.info('component census over %s samples: %s', samples, counts)
    return ComponentReport(
        target=target,
        samples=found,
        counts=counts,
        representatives=representatives,
        edges=edges,
        failures=failures,
    )


def blow_down_gaps(seed, target, epsilons=(1.0, 0.5, 0.25, 0.125),
                   cfg=None):
    """ Relative distance of the metric spectrum over eps * target from
    the spectrum at ``seed``, for each eps.

    """
    base = metric_engine.metric_gram(seed).eigenvalues
    gaps = []
    for eps in epsilons:
        line = continue_line(seed, ts.linear_scale(target, eps), cfg)
        spectrum = metric_engine.metric_gram(line).eigenvalues
        gaps.append((eps, float(
            np.linalg.norm(spectrum - base) / np.linalg.norm(base)
        )))
    return gaps
