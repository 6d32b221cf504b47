# pylint: disable-all
# pylint: skip-file
from nonvanishing.bounds import (BoundKind, Bound, zeta, bar_alpha, tau,
                                 eta_delta, eta_alpha_delta)
from nonvanishing.theorems import (ClauseId, Verdict, GammaComparison,
                                   NonVanishingReport, forced_nonvanishing,
                                   vanishing_constraints_stable,
                                   gamma_bound_comparison)
from nonvanishing.splitting import (SplitOutcome, SplitVerdict, LeftVanishing,
                                    split_decision, propagate_left_vanishing)
