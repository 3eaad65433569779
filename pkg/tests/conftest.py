import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fixtures import make_league, standard_profiles  # noqa: E402

from gridiron_trades.engine import mode_context  # noqa: E402
from gridiron_trades.sheets import batch_valuate  # noqa: E402
from gridiron_trades.valuation import SmeWeights  # noqa: E402


@pytest.fixture(scope="session")
def desk_league():
    return make_league(seed=7, n_teams=10)


@pytest.fixture(scope="session")
def profiles():
    return standard_profiles()


@pytest.fixture(scope="session")
def desk_sheets(desk_league, profiles):
    return batch_valuate(desk_league, profiles, SmeWeights(), top_n=400)


@pytest.fixture(scope="session")
def desk_contexts(desk_league, desk_sheets):
    return [
        mode_context(desk_league, mode, sheet.valuations(), sheet.range.sme_high)
        for mode, sheet in sorted(desk_sheets.items())
    ]
