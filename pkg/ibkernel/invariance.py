# -*- coding: utf-8 -*-
"""
invariance.py - Grid translational invariance benchmark.

Random pairs of markers are placed in a periodic box, their grid coupling is
normalized by C**3 and binned by the distance between the markers. A kernel
that is close to translation invariant shows little spread of the coupling
inside each bin.
"""
import logging
import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ibkernel.core import KERNEL_SPECS, KernelId
from ibkernel.exceptions import BenchConfigError, EmptyResult
from ibkernel.grid import PeriodicGrid3, pair_couplings

logger = logging.getLogger(__name__)

DEFAULT_PAIRS = 100000
DEFAULT_BOX = 32
DEFAULT_MESHWIDTH = 1.0
DEFAULT_SEED = 0
DEFAULT_BIN_WIDTH = 0.1
DEFAULT_MAX_DISTANCE = 6.0
DEFAULT_MIN_COUNT = 2
DEFAULT_SENSITIVITY_WIDTHS = (0.05, 0.1, 0.2)

# Distance where the spread of the standard 6-point kernel peaks
PEAK_DISTANCE = 2.5

# Pairs are generated by chunks of CHUNK, chunk c drawing from its own
# random stream, so that pair i only depends on (seed, i)
CHUNK = 4096

# Maximum standard deviation of the normalized coupling over all bins, as
# expected for 100000 pairs in a 32**3 box
REFERENCE_MAX_STD = {
    KernelId.STD3: 0.0428,
    KernelId.STD4: 0.0168,
    KernelId.STD6: 0.0296,
    KernelId.NEW6: 0.0042,
}
REFERENCE_ORDER = (KernelId.NEW6, KernelId.STD4, KernelId.STD6, KernelId.STD3)
REFERENCE_RELATIVE_TOLERANCE = 0.3

COUPLING_SLACK = 1e-10


def coupling_bounds(kernel):
    """
    Bounds of the normalized coupling of a kernel.

    By Cauchy-Schwarz on each axis the normalized coupling never exceeds 1 in
    absolute value. It is also non-negative when phi is.

    :param kernel: `KernelId` or kernel name.
    :return: Tuple (lower, upper), COUPLING_SLACK included.

    >>> coupling_bounds('new6')
    (-1e-10, 1.0000000001)
    >>> coupling_bounds('std6')
    (-1.0000000001, 1.0000000001)
    """
    upper = 1.0 + COUPLING_SLACK
    if KERNEL_SPECS[KernelId.from_name(kernel)].non_negative:
        return -COUPLING_SLACK, upper
    return -upper, upper


@dataclass(frozen=True)
class BenchConfig(object):
    """
    Parameters of a benchmark run.

    `box` is the edge length of the periodic box and must hold a whole
    number of meshes. With `detrend`, the default, the spread of a bin is
    measured about the least-squares line of coupling against distance
    rather than about the bin mean (see `bin_samples`). `workers` is the
    number of threads evaluating chunks of pairs; it never changes the
    results.
    """
    kernel: KernelId = KernelId.NEW6
    pairs: int = DEFAULT_PAIRS
    box: int = DEFAULT_BOX
    meshwidth: float = DEFAULT_MESHWIDTH
    seed: int = DEFAULT_SEED
    bin_width: float = DEFAULT_BIN_WIDTH
    max_distance: float = DEFAULT_MAX_DISTANCE
    detrend: bool = True
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'kernel', KernelId.from_name(self.kernel))
        if int(self.pairs) < 1:
            raise BenchConfigError('pairs', self.pairs)
        if not 0 <= int(self.seed) < 2 ** 64:
            raise BenchConfigError('seed', self.seed)
        if not (math.isfinite(self.meshwidth) and self.meshwidth > 0):
            raise BenchConfigError('meshwidth', self.meshwidth)
        cells = self.box / self.meshwidth
        radius = KERNEL_SPECS[self.kernel].support_radius
        if abs(cells - round(cells)) > 1e-9 * cells or \
                round(cells) < 2 * math.ceil(radius):
            raise BenchConfigError('box', self.box)
        if not (math.isfinite(self.bin_width) and self.bin_width > 0):
            raise BenchConfigError('bin_width', self.bin_width)
        if not 0 < self.max_distance <= self.box / 2.0:
            raise BenchConfigError('max_distance', self.max_distance)
        if int(self.workers) < 1:
            raise BenchConfigError('workers', self.workers)

    @property
    def grid(self):
        cells = int(round(self.box / self.meshwidth))
        return PeriodicGrid3((cells, cells, cells), self.meshwidth)


PairSample = namedtuple('PairSample', ['distance', 'coupling'])


class PairSamples(namedtuple('PairSamples', ['distance', 'coupling'])):
    """
    Columns of (distance, normalized coupling) observations.

    Iterating yields one `PairSample` per pair.
    """
    __slots__ = ()

    def __len__(self):
        return self.distance.shape[0]

    def __iter__(self):
        for d, c in zip(self.distance, self.coupling):
            yield PairSample(float(d), float(c))


class BinnedStats(namedtuple('BinnedStats', ['lo', 'hi', 'count', 'min',
                                             'mean', 'max', 'std'])):
    """
    Per-bin statistics of the coupling, one array entry per bin.

    Statistics of empty bins are NaN; std is the population standard
    deviation.
    """
    __slots__ = ()

    def __len__(self):
        return self.lo.shape[0]

    def rows(self):
        """
        Iterate on (lo, hi, count, min, mean, max, std) tuples.
        """
        return zip(self.lo, self.hi, self.count, self.min, self.mean,
                   self.max, self.std)


def _chunk_pairs(cfg, chunk):
    """
    Draw the CHUNK pairs of one chunk.

    :return: Tuple (X1, X2, distance) of full-chunk arrays.
    """
    rng = np.random.default_rng(np.random.SeedSequence(int(cfg.seed),
                                                       spawn_key=(chunk, )))
    first = rng.random((CHUNK, 3)) * cfg.box
    distance = rng.random(CHUNK) * cfg.max_distance
    direction = rng.standard_normal((CHUNK, 3))
    norm = np.linalg.norm(direction, axis=1)
    direction[norm == 0.0] = (1.0, 0.0, 0.0)
    norm[norm == 0.0] = 1.0
    direction /= norm[:, None]
    second = np.mod(first + distance[:, None] * direction, cfg.box)
    return first, second, distance


def _chunk_bounds(cfg):
    for chunk in range(int(math.ceil(cfg.pairs / float(CHUNK)))):
        yield chunk, min(CHUNK, cfg.pairs - chunk * CHUNK)


def sample_pairs(cfg):
    """
    Draw the marker pairs of a benchmark.

    X1 is uniform in the box, X2 = X1 + d with a direction uniform on the
    sphere and abs(d) uniform in [0, max_distance], wrapped into the box.

    :param cfg: The `BenchConfig`.
    :return: Tuple (X1, X2, distance) of arrays with cfg.pairs rows.
    """
    parts = [tuple(a[:size] for a in _chunk_pairs(cfg, chunk))
             for chunk, size in _chunk_bounds(cfg)]
    return tuple(np.concatenate(column) for column in zip(*parts))


def _evaluate_chunk(cfg, chunk, size):
    first, second, distance = _chunk_pairs(cfg, chunk)
    coupling = pair_couplings(cfg.kernel, cfg.grid, first[:size],
                              second[:size])
    scale = cfg.meshwidth ** 6 / KERNEL_SPECS[cfg.kernel].sum_of_squares ** 3
    return distance[:size], coupling * scale


def evaluate_pairs(cfg):
    """
    Normalized couplings of the pairs of a benchmark.

    Chunks are evaluated by cfg.workers threads and reassembled in order.

    :param cfg: The `BenchConfig`.
    :return: `PairSamples`.
    """
    bounds = list(_chunk_bounds(cfg))
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            parts = list(executor.map(lambda b: _evaluate_chunk(cfg, *b),
                                      bounds))
    else:
        parts = [_evaluate_chunk(cfg, *b) for b in bounds]
    samples = PairSamples(np.concatenate([p[0] for p in parts]),
                          np.concatenate([p[1] for p in parts]))
    lower, upper = coupling_bounds(cfg.kernel)
    outside = (samples.coupling < lower) | (samples.coupling > upper)
    if outside.any():
        logger.warning("Kernel %s: %d normalized couplings outside [%g, %g]",
                       cfg.kernel, int(outside.sum()), lower, upper)
    return samples


def bin_samples(samples, bin_width, max_distance, detrend=False):
    """
    Bin observations by distance and compute per-bin statistics.

    Bins [i * w, (i + 1) * w) cover [0, max_distance]; the last one is closed
    and may be narrower.

    :param samples: `PairSamples`.
    :param bin_width: Width w of the bins.
    :param max_distance: Upper bound of the distances.
    :param detrend: If True, std is taken about the least-squares line of
                    coupling against distance within each bin.
    :return: `BinnedStats`.

    >>> samples = PairSamples(np.array([0.05, 0.15, 0.16]),
    ...                       np.array([1.0, 0.5, 0.7]))
    >>> stats = bin_samples(samples, 0.1, 0.2)
    >>> [int(c) for c in stats.count]
    [1, 2]
    >>> round(float(stats.std[1]), 12)
    0.1
    """
    if not bin_width > 0:
        raise BenchConfigError('bin_width', bin_width)
    nbins = max(1, int(math.ceil(max_distance / bin_width - 1e-9)))
    lo = bin_width * np.arange(nbins, dtype=np.float64)
    hi = np.minimum(lo + bin_width, max_distance)
    index = np.minimum((samples.distance / bin_width).astype(np.int64),
                       nbins - 1)

    count = np.bincount(index, minlength=nbins)
    filled = count > 0
    safe = np.where(filled, count, 1)
    mean = np.bincount(index, weights=samples.coupling,
                       minlength=nbins) / safe
    centered = samples.coupling - mean[index]
    scc = np.bincount(index, weights=centered ** 2, minlength=nbins)
    if detrend:
        dmean = np.bincount(index, weights=samples.distance,
                            minlength=nbins) / safe
        dcentered = samples.distance - dmean[index]
        sdd = np.bincount(index, weights=dcentered ** 2, minlength=nbins)
        sdc = np.bincount(index, weights=dcentered * centered,
                          minlength=nbins)
        slope_part = np.where(sdd > 0, sdc ** 2 / np.where(sdd > 0, sdd, 1.0),
                              0.0)
        scc = np.maximum(scc - slope_part, 0.0)
    std = np.sqrt(scc / safe)

    low = np.full(nbins, np.inf)
    high = np.full(nbins, -np.inf)
    np.minimum.at(low, index, samples.coupling)
    np.maximum.at(high, index, samples.coupling)

    nan = np.nan
    return BinnedStats(lo=lo, hi=hi, count=count,
                       min=np.where(filled, low, nan),
                       mean=np.where(filled, mean, nan),
                       max=np.where(filled, high, nan),
                       std=np.where(filled, std, nan))


def max_std(stats, min_count=DEFAULT_MIN_COUNT):
    """
    Largest standard deviation over the bins holding at least min_count
    observations.

    :param stats: `BinnedStats`.
    :param min_count: Minimum bin population, at least 2.
    :return: The maximum standard deviation.
    :raises EmptyResult: No bin is populated enough.
    """
    if min_count < 2:
        raise BenchConfigError('min_count', min_count)
    populated = stats.count >= min_count
    if not populated.any():
        raise EmptyResult(min_count)
    return float(np.max(stats.std[populated]))


def peak_ratio(stats, distance, min_count=DEFAULT_MIN_COUNT):
    """
    Standard deviation of the bin containing a distance relative to the
    median bin standard deviation.

    :param stats: `BinnedStats`.
    :param distance: Where to look for a peak.
    :param min_count: Minimum population of the bins taken into account.
    :return: The ratio.
    :raises EmptyResult: The bin containing distance, or every bin, holds
                         fewer than min_count observations.
    """
    populated = stats.count >= min_count
    index = max(int(np.searchsorted(stats.lo, distance, side='right')) - 1,
                0)
    if not populated[index]:
        raise EmptyResult(min_count)
    return float(stats.std[index] / np.median(stats.std[populated]))


def bin_width_sensitivity(samples, widths, max_distance, detrend=False,
                          min_count=DEFAULT_MIN_COUNT):
    """
    Maximum standard deviation of one set of observations binned at several
    widths.

    :return: List of (width, max_std) tuples.
    """
    return [(float(width),
             max_std(bin_samples(samples, width, max_distance, detrend),
                     min_count))
            for width in widths]


def run_bench(cfg):
    """
    Run the translational invariance benchmark.

    :param cfg: The `BenchConfig`.
    :return: Tuple (`PairSamples`, `BinnedStats`).
    """
    logger.info("Benchmark of kernel %s: %d pairs in a box of %s",
                cfg.kernel, cfg.pairs, cfg.box)
    samples = evaluate_pairs(cfg)
    stats = bin_samples(samples, cfg.bin_width, cfg.max_distance,
                        cfg.detrend)
    if logger.isEnabledFor(logging.DEBUG):
        output = "\nBins of kernel {0}:\n".format(cfg.kernel)
        for lo, hi, count, _, mean, _, std in stats.rows():
            output += "\t[{0:.3f}, {1:.3f}): {2} pairs, mean {3:.6f}, " \
                      "std {4:.6f}\n".format(lo, hi, count, mean, std)
        logger.debug(output)
    return samples, stats


def summary(cfg, stats, sensitivity=None):
    """
    Summary of a benchmark run, suitable for JSON serialization.

    :param cfg: The `BenchConfig`.
    :param stats: `BinnedStats` of the run.
    :param sensitivity: Optional output of `bin_width_sensitivity`.
    :return: Dictionary.
    """
    result = {
        'kernel': str(cfg.kernel),
        'pairs': int(cfg.pairs),
        'seed': int(cfg.seed),
        'box': cfg.box,
        'meshwidth': cfg.meshwidth,
        'bin_width': cfg.bin_width,
        'max_distance': cfg.max_distance,
        'detrend': cfg.detrend,
        'max_std': max_std(stats),
        'peak_ratio': None,
    }
    if PEAK_DISTANCE < cfg.max_distance:
        try:
            result['peak_ratio'] = peak_ratio(stats, PEAK_DISTANCE)
        except EmptyResult:
            logger.warning("Kernel %s: bin at distance %g is not populated",
                           cfg.kernel, PEAK_DISTANCE)
    if sensitivity is not None:
        result['sensitivity'] = [{'bin_width': w, 'max_std': s}
                                 for w, s in sensitivity]
    return result


def reference_ordering_holds(max_stds):
    """
    Whether maximum standard deviations follow the reference ordering
    new6 < std4 < std6 < std3.

    :param max_stds: Dict mapping `KernelId` to max_std.
    """
    values = [max_stds[k] for k in REFERENCE_ORDER]
    return all(a < b for a, b in zip(values, values[1:]))


def within_reference(kernel, value, tolerance=REFERENCE_RELATIVE_TOLERANCE):
    """
    Whether a maximum standard deviation is within a relative tolerance of
    the reference value.
    """
    reference = REFERENCE_MAX_STD[KernelId.from_name(kernel)]
    return abs(value - reference) <= tolerance * reference
