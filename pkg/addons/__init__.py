# pylint: disable-all
# pylint: skip-file
from addons.tables import (DualityConflict, parse_table, serialize_table,
                           fill_by_duality, duality_conflicts)
from addons.verification import (CheckStatus, CheckResult, verify_table,
                                 all_passed, profile_from_table)
from addons.fixtures import (Fixture, builtin_fixtures, fixture_by_name,
                             load_table, run_fixture)
from addons.sweep import ParameterSweep, BoundSweep
