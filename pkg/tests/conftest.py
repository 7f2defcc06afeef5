import math

import pytest

from xduce import Mode, TransducerConfig

TWO_PI = 2.0 * math.pi


def make_device(
    kappa_a_i=TWO_PI * 10e6,
    kappa_a_ex=TWO_PI * 20e6,
    kappa_b_i=0.5,
    kappa_b_ex=TWO_PI * 1000.0,
    g_eo=TWO_PI * 40.0,
) -> TransducerConfig:
    """Illustrative telecom-optical / 9 GHz microwave device.

    The microwave intrinsic loss of 0.5 rad/s corresponds to a 2 s photon
    lifetime. The numbers are a plausible design point, not a reproduction
    of any specific hardware.
    """
    return TransducerConfig(
        mode_a=Mode("a", TWO_PI * 193.5e12, kappa_a_i, kappa_a_ex),
        mode_b=Mode("b", TWO_PI * 9e9, kappa_b_i, kappa_b_ex),
        mode_p=Mode("p", TWO_PI * 193.5e12, TWO_PI * 15e6, TWO_PI * 15e6),
        g_eo=g_eo,
    )


@pytest.fixture
def device() -> TransducerConfig:
    return make_device()
