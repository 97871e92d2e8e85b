import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from maskpipe import parse_masked_c  # noqa: E402
from maskpipe.benchmarks import DOMAND_ANNOTATED, MOTIVATING_SOURCE  # noqa: E402


@pytest.fixture
def domand():
    return parse_masked_c(DOMAND_ANNOTATED)


@pytest.fixture
def motivating():
    return parse_masked_c(MOTIVATING_SOURCE)
