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

from collections import OrderedDict

from dNG.module.named_loader import NamedLoader
from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.failure_kind import FailureKind
from healsim.data.failure_profiles.failure_trace import FailureTrace
from healsim.data.failure_profiles.failure_trace_entry import FailureTraceEntry
from healsim.planning.planners import Planners

from .simulation_config import SimulationConfig
from .simulator import Simulator

class AnalyticalScenarios(object):
    """
Scripted scenarios with pinned components and impacts. Every scenario is
replayed for all planners on a 100 shop marketplace using calibrated
planning times.

"baseline": a removed component with a better alternative type (CF3), a
component throwing exceptions (CF2) and a crashed component (CF1).
"adverse-order": impacts chosen so the fixed failure kind order of the
static planner is the worst execution order.
"oracle-delay": the baseline group to compare the delay of the oracle
planner.
"second-group": the baseline group followed by a second group arriving
while the oracle planner is still busy.
"reliable-rules" / "unreliable-rules": the baseline group with a rule
success likelihood of 1.0 and 0.5.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: simulation
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    ALIASES = { "fig10a": "baseline",
                "fig10b": "adverse-order",
                "fig11": "oracle-delay",
                "fig14": "second-group",
                "fig17a": "reliable-rules",
                "fig17b": "unreliable-rules"
              }
    """
Alternative scenario IDs
    """
    HORIZON = 120.0
    """
Scenario duration in seconds
    """
    IDS = ( "baseline", "adverse-order", "oracle-delay", "second-group", "reliable-rules", "unreliable-rules" )
    """
Scenario IDs
    """
    PLANNING_TIME_SCALE = 200.0
    """
Factor applied to calibrated planning times
    """
    SECOND_GROUP_TIME = 16.0
    """
Arrival time of the second failure group of "second-group"
    """
    SHOPS = 100
    """
Number of shops
    """

    @staticmethod
    def create_model(scenario_id):
        """
Builds the architecture model of the given scenario with pinned
criticalities and component type reliabilities.

:param scenario_id: Scenario ID

:return: (object) ArchitectureModel instance
:since:  v0.1.00
        """

        scenario_id = AnalyticalScenarios.resolve(scenario_id)

        _return = ArchitectureModel.build(AnalyticalScenarios.SHOPS, 0)

        if (scenario_id == "adverse-order"):
            # User Management Service: 5 connectors
            AnalyticalScenarios._pin_component(_return, 0, 14, 1, ( 0.95, 0.70, 0.60 ))
            # Bid and Buy Service: 4 connectors
            AnalyticalScenarios._pin_component(_return, 1, 1, 10, ( 0.80, 0.60, 0.55 ))
            # Authentication Service: 3 connectors
            AnalyticalScenarios._pin_component(_return, 2, 0, 5, ( 0.70, 0.60, 0.55 ))
        else:
            AnalyticalScenarios._pin_component(_return, 0, 14, 10, ( 0.70, 0.95, 0.60 ))
            AnalyticalScenarios._pin_component(_return, 1, 1, 2, ( 0.80, 0.60, 0.55 ))
            AnalyticalScenarios._pin_component(_return, 2, 0, 1, ( 0.70, 0.60, 0.55 ))
        #

        return _return
    #

    @staticmethod
    def create_config(scenario_id, planner_id):
        """
Returns the simulation config of the given scenario and planner.

:param scenario_id: Scenario ID
:param planner_id: Planner ID

:return: (object) SimulationConfig instance
:since:  v0.1.00
        """

        scenario_id = AnalyticalScenarios.resolve(scenario_id)

        return SimulationConfig(shops = AnalyticalScenarios.SHOPS,
                                planner_id = planner_id,
                                rule_success_likelihood = (0.5 if (scenario_id == "unreliable-rules") else 1.0),
                                planning_time_mode = SimulationConfig.MODE_CALIBRATED,
                                planning_time_scale = AnalyticalScenarios.PLANNING_TIME_SCALE
                               )
    #

    @staticmethod
    def create_trace(scenario_id):
        """
Returns the failure trace of the given scenario.

:param scenario_id: Scenario ID

:return: (object) FailureTrace instance
:since:  v0.1.00
        """

        scenario_id = AnalyticalScenarios.resolve(scenario_id)

        entries = [ FailureTraceEntry.pinned(0.0, FailureKind.CF3, "C0000.14"),
                    FailureTraceEntry.pinned(0.0, FailureKind.CF2, "C0001.01"),
                    FailureTraceEntry.pinned(0.0, FailureKind.CF1, "C0002.00")
                  ]

        if (scenario_id == "second-group"):
            time = AnalyticalScenarios.SECOND_GROUP_TIME

            entries += [ FailureTraceEntry.pinned(time, FailureKind.CF1, "C0003.00"),
                         FailureTraceEntry.pinned(time, FailureKind.CF2, "C0004.01"),
                         FailureTraceEntry.pinned(time, FailureKind.CF1, "C0005.14")
                       ]
        #

        return FailureTrace(entries, AnalyticalScenarios.HORIZON, scenario_id)
    #

    @staticmethod
    def _pin_component(model, shop_index, slot, criticality, reliabilities):
        """
Pins the reliabilities of the component types of a slot and assigns the
first type and the given criticality to the component of a shop.

:param model: Architecture model
:param shop_index: Shop index
:param slot: Slot index
:param criticality: Criticality of the component
:param reliabilities: Reliabilities of the slot's component types

:since: v0.1.00
        """

        component_types = model.get_alternative_types(slot)
        for component_type, reliability in zip(component_types, reliabilities): component_type.reliability = reliability

        component = model.shops[shop_index].components[slot]
        component.component_type = component_types[0]
        component.criticality = criticality
    #

    @staticmethod
    def run(scenario_id, planner_ids = None):
        """
Replays the given scenario for each planner.

:param scenario_id: Scenario ID
:param planner_ids: Planner IDs; all planners if not defined

:return: (dict) Ordered dict of SimulationTimeline instances by planner ID
:since:  v0.1.00
        """

        scenario_id = AnalyticalScenarios.resolve(scenario_id)
        if (planner_ids is None): planner_ids = Planners.IDS

        _return = OrderedDict()
        trace = AnalyticalScenarios.create_trace(scenario_id)

        for planner_id in planner_ids:
            config = AnalyticalScenarios.create_config(scenario_id, planner_id)
            _return[planner_id] = Simulator(config, AnalyticalScenarios.create_model(scenario_id)).run(trace)
        #

        log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)

        if (log_handler is not None):
            log_handler.debug("Scenario {0} replayed for {1}", scenario_id, ", ".join(planner_ids), context = "simulation")
        #

        return _return
    #

    @staticmethod
    def resolve(scenario_id):
        """
Returns the scenario ID for the given ID or alias.

:param scenario_id: Scenario ID or alias

:return: (str) Scenario ID
:since:  v0.1.00
        """

        _return = AnalyticalScenarios.ALIASES.get(scenario_id, scenario_id)
        if (_return not in AnalyticalScenarios.IDS): raise ValueException("Unknown scenario '{0}'".format(scenario_id))

        return _return
    #
#
