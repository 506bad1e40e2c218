"""Random valid parameter sets shared by the analytics and acceptance tests."""

from dataclasses import dataclass

import numpy as np

from hapsjam.channel import FadingSpec, LinkState


@dataclass
class Draw:
    useful: tuple
    jammer: tuple
    jammer_probs: tuple
    fading: FadingSpec
    state: LinkState
    gamma: float

    def args(self):
        return self.useful, self.jammer, self.jammer_probs, self.fading, self.state, self.gamma


def random_draw(rng):
    def coefficients():
        d_los = 10.0 ** rng.uniform(-18.0, -10.0)
        return d_los, d_los * 10.0 ** -rng.uniform(0.0, 2.0)

    fading = FadingSpec(*rng.uniform(0.5, 6.0, 1), *rng.uniform(0.1, 2.0, 1),
                        *rng.uniform(0.5, 6.0, 1), *rng.uniform(0.1, 2.0, 1))
    p_los = float(rng.uniform(0.0, 1.0))
    useful, jammer = coefficients(), coefficients()
    # keep the SJR threshold inside the range where the answer is not trivially 0 or 1
    centre = 10.0 * np.log10(useful[0] / jammer[0])
    gamma_db = centre + rng.uniform(-25.0, 25.0)
    state = LinkState.LOS if rng.random() < 0.5 else LinkState.NLOS
    return Draw(useful, jammer, (p_los, 1.0 - p_los), fading, state, 10.0 ** (gamma_db / 10.0))


def mc_conditional(draw, n, rng, chunk=1_000_000):
    """Fraction of D_u h_u < gamma D_j h_j over n brute-force draws."""
    m_u, o_u = draw.fading.shape_scale(draw.state)
    d_u = draw.useful[0] if draw.state is LinkState.LOS else draw.useful[1]
    m_l, o_l = draw.fading.shape_scale(LinkState.LOS)
    m_n, o_n = draw.fading.shape_scale(LinkState.NLOS)
    hits, done = 0, 0
    while done < n:
        k = min(chunk, n - done)
        h_u = rng.gamma(m_u, o_u, k)
        los = rng.random(k) < draw.jammer_probs[0]
        h_j = np.where(los, rng.gamma(m_l, o_l, k), rng.gamma(m_n, o_n, k))
        d_j = np.where(los, draw.jammer[0], draw.jammer[1])
        hits += int(np.count_nonzero(d_u * h_u < draw.gamma * d_j * h_j))
        done += k
    return hits / n
