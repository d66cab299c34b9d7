# -*- coding: utf-8 -*-

"""
healsim
Architectural self-healing simulator
----------------------------------------------------------------------------
(C) direct Netware Group - All rights reserved

The following license agreement remains valid unless any additions or
changes are being made by direct Netware Group in a written form.

This program is free software; you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation; either version 2 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT
ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License for
more details.

You should have received a copy of the GNU General Public License along with
this program; if not, write to the Free Software Foundation, Inc.,
51 Franklin Street, Fifth Floor, Boston, MA 02110-1301, USA.
----------------------------------------------------------------------------
https://www.direct-netware.de/redirect?licenses;gpl
----------------------------------------------------------------------------
"""

from dNG.data.settings import Settings
from dNG.runtime.value_exception import ValueException

from healsim.planning.planners import Planners
from healsim.planning.rule_templates import RuleTemplates

class SimulationConfig(object):
    """
Parameters of a simulation run.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: simulation
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    MODE_CALIBRATED = "CALIBRATED"
    """
Planning times are taken from the calibrated table and scaled
    """
    MODE_MEASURED = "MEASURED"
    """
Wall clock analysis and planning times are added to the virtual time
    """

    def __init__(self,
                 shops = 100,
                 planner_id = "u-driven",
                 k = None,
                 rule_success_likelihood = 1.0,
                 rule_costs = None,
                 seed = 0,
                 planning_time_mode = MODE_MEASURED,
                 planning_time_scale = 1.0,
                 oracle_exhaustive_limit = None,
                 time_window = None
                ):
        """
Constructor __init__(SimulationConfig)

:param shops: Number of shops
:param planner_id: Planner ID
:param k: Maximum number of rules per plan; derived from the time window
          or "healsim_planner_k" if not defined
:param rule_success_likelihood: Likelihood of a successful rule execution
:param rule_costs: Dict of costs per repair action kind
:param seed: Random seed of the architecture and rule outcomes
:param planning_time_mode: MEASURED or CALIBRATED
:param planning_time_scale: Factor applied to calibrated planning times
:param oracle_exhaustive_limit: Maximum number of issues the oracle
                                solves exhaustively
:param time_window: Time window in seconds used to derive k

:since: v0.1.00
        """

        if (shops < 1): raise ValueException("At least one shop is required")
        if (planner_id not in Planners.IDS): raise ValueException("Unknown planner '{0}'".format(planner_id))
        if (rule_success_likelihood <= 0 or rule_success_likelihood > 1): raise ValueException("Rule success likelihood must be in (0, 1]")
        if (planning_time_mode not in ( SimulationConfig.MODE_CALIBRATED, SimulationConfig.MODE_MEASURED )): raise ValueException("Unknown planning time mode '{0}'".format(planning_time_mode))
        if (planning_time_scale < 0): raise ValueException("Planning time scale must not be negative")
        if (k is not None and k < 1): raise ValueException("k must be positive")

        self.k = k
        """
Maximum number of rules per plan
        """
        self.oracle_exhaustive_limit = oracle_exhaustive_limit
        """
Maximum number of issues the oracle solves exhaustively
        """
        self.planner_id = planner_id
        """
Planner ID
        """
        self.planning_time_mode = planning_time_mode
        """
MEASURED or CALIBRATED
        """
        self.planning_time_scale = float(planning_time_scale)
        """
Factor applied to calibrated planning times
        """
        self.rule_costs = rule_costs
        """
Dict of costs per repair action kind
        """
        self.rule_success_likelihood = float(rule_success_likelihood)
        """
Likelihood of a successful rule execution
        """
        self.seed = seed
        """
Random seed of the architecture and rule outcomes
        """
        self.shops = shops
        """
Number of shops
        """
        self.time_window = time_window
        """
Time window in seconds used to derive k
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<SimulationConfig planner={0} shops={1:d} likelihood={2!r} mode={3} seed={4!r}>".format(self.planner_id,
                                                                                                      self.shops,
                                                                                                      self.rule_success_likelihood,
                                                                                                      self.planning_time_mode,
                                                                                                      self.seed
                                                                                                     )
    #

    def copy(self, **kwargs):
        """
Returns a copy with the given parameters replaced.

:return: (object) SimulationConfig instance
:since:  v0.1.00
        """

        parameters = { "shops": self.shops,
                       "planner_id": self.planner_id,
                       "k": self.k,
                       "rule_success_likelihood": self.rule_success_likelihood,
                       "rule_costs": self.rule_costs,
                       "seed": self.seed,
                       "planning_time_mode": self.planning_time_mode,
                       "planning_time_scale": self.planning_time_scale,
                       "oracle_exhaustive_limit": self.oracle_exhaustive_limit,
                       "time_window": self.time_window
                     }

        parameters.update(kwargs)
        return SimulationConfig(**parameters)
    #

    def get_k(self, templates):
        """
Returns the maximum number of rules per plan.

:param templates: Rule templates

:return: (int) k
:since:  v0.1.00
        """

        if (self.k is not None): _return = self.k
        elif (self.time_window is not None):
            _return = RuleTemplates.derive_k(self.time_window, templates)
        else: _return = Settings.get("healsim_planner_k", 100)

        return _return
    #

    def is_calibrated(self):
        """
Returns true if planning times are calibrated.

:return: (bool) True if calibrated
:since:  v0.1.00
        """

        return (self.planning_time_mode == SimulationConfig.MODE_CALIBRATED)
    #
#
