"""Peak detection on sampled concurrence curves."""
import numpy as np

PEAK_THRESHOLD = 1e-6


def peak_times(times, values, threshold=PEAK_THRESHOLD):
    """Refined times of the interior local maxima of ``values`` above ``threshold``.

    A grid point ``i`` is a peak when ``v[i-1] < v[i] >= v[i+1]``. Its time is
    refined by locating the zero of the finite-difference slope, linearly
    interpolated between the midpoints ``t[i-1/2]`` and ``t[i+1/2]``.
    """
    t = np.asarray(times, dtype=float)
    v = np.asarray(values, dtype=float)
    if len(v) < 3:
        return np.empty(0)
    left = v[1:-1] - v[:-2]
    right = v[2:] - v[1:-1]
    idx = np.nonzero((left > 0) & (right <= 0) & (v[1:-1] > threshold))[0] + 1
    out = np.empty(len(idx))
    for n, i in enumerate(idx):
        dl = v[i] - v[i - 1]
        dr = v[i + 1] - v[i]
        mid_l = 0.5 * (t[i - 1] + t[i])
        mid_r = 0.5 * (t[i] + t[i + 1])
        out[n] = mid_l + (mid_r - mid_l) * dl / (dl - dr)
    return out


def first_peak_time(times, values, threshold=PEAK_THRESHOLD):
    """Refined time of the first local maximum, or NaN if there is none."""
    p = peak_times(times, values, threshold)
    return float(p[0]) if len(p) else float("nan")


def mean_peak_spacing(times, values, threshold=PEAK_THRESHOLD):
    """Average spacing between consecutive refined local maxima (NaN if < 2 peaks)."""
    p = peak_times(times, values, threshold)
    if len(p) < 2:
        return float("nan")
    return float((p[-1] - p[0]) / (len(p) - 1))
