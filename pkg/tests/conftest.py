import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from sextic_mono.audit import audit_box  # noqa: E402
from sextic_mono.config import BoxConfig  # noqa: E402

FULL_BOX = BoxConfig.symmetric(200)


@pytest.fixture(scope="session")
def full_box_audit():
    """One pass over k in {1,2}, 1 <= |A|, |B| <= 200, shared by every box-wide check."""
    cfg = FULL_BOX
    return audit_box(cfg.k_set, cfg.A_range, cfg.B_range, jobs=cfg.workers, chunk_size=cfg.chunk_size)


@pytest.fixture(scope="session")
def small_box_audit():
    cfg = BoxConfig.symmetric(25)
    return audit_box(cfg.k_set, cfg.A_range, cfg.B_range, jobs=1)
