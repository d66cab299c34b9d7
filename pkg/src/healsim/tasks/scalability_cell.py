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

from healsim.analysis.analyzer import Analyzer
from healsim.analysis.annotations import Annotations
from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.experiments.experiment_spec import ExperimentSpec
from healsim.data.experiments.result_row import ResultRow
from healsim.data.failure_profiles.trace_generator import TraceGenerator
from healsim.planning.planners import Planners
from healsim.planning.rule_templates import RuleTemplates
from healsim.runtime.oracle_too_large_exception import OracleTooLargeException
from healsim.simulation.failure_injector import FailureInjector
from healsim.simulation.planning_time_statistics import PlanningTimeStatistics

from .abstract_cell import AbstractCell

class ScalabilityCell(AbstractCell):
    """
Measures the planning time of one planner for one failure group injected
into a marketplace of the given size.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: tasks
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    EXPERIMENT_ID = "scalability"
    """
Experiment ID of the result rows
    """

    def __init__(self, planner_id, shops, fgs, repetitions = 300, seed = 0, max_seconds = None, k = None, exhaustive_limit = None):
        """
Constructor __init__(ScalabilityCell)

:param planner_id: Planner ID
:param shops: Number of shops
:param fgs: Failure group size
:param repetitions: Maximum number of repetitions
:param seed: Random seed of the architecture and the failure group
:param max_seconds: Time budget of the measurement
:param k: Maximum number of rules per plan; the number of issues if not
          defined
:param exhaustive_limit: Maximum number of issues the oracle solves
                         exhaustively

:since: v0.1.00
        """

        AbstractCell.__init__(self)

        self.exhaustive_limit = exhaustive_limit
        """
Maximum number of issues the oracle solves exhaustively
        """
        self.fgs = fgs
        """
Failure group size
        """
        self.k = k
        """
Maximum number of rules per plan
        """
        self.max_seconds = max_seconds
        """
Time budget of the measurement
        """
        self.planner_id = planner_id
        """
Planner ID
        """
        self.repetitions = repetitions
        """
Maximum number of repetitions
        """
        self.seed = seed
        """
Random seed of the architecture and the failure group
        """
        self.shops = shops
        """
Number of shops
        """

        self.context_id = "healsim.tasks.ScalabilityCell.{0}.{1:d}.{2:d}".format(planner_id, shops, fgs)
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<ScalabilityCell {0}>".format(self.context_id)
    #

    def prepare(self):
        """
Builds the model and injects the failure group.

:return: (tuple) Architecture model and analyzed annotations
:since:  v0.1.00
        """

        model = ArchitectureModel.build(self.shops, self.seed)
        trace = TraceGenerator.generate_synthetic(self.fgs, 1, 1.0, self.seed)
        injector = FailureInjector(model)

        changes = [ ]
        for entry in trace: changes += injector.inject(entry)

        annotations = Annotations(max(1, self.fgs) if (self.k is None) else self.k)
        Analyzer().analyze(annotations, changes, model)

        return ( model, annotations )
    #

    def _run(self):
        """
Cell specific implementation of "run()".

:return: (list) ResultRow instances
:since:  v0.1.00
        """

        _return = [ ]

        model, annotations = self.prepare()
        planner = Planners.create(self.planner_id, RuleTemplates.get_default(), model, False, self.exhaustive_limit)

        try: statistics = PlanningTimeStatistics.measure(planner, annotations, model, self.repetitions, self.max_seconds)
        except OracleTooLargeException:
            statistics = None

            if (self.log_handler is not None):
                self.log_handler.info("{0!r} skipped: {1:d} issues exceed the exhaustive limit", self, len(annotations), context = "tasks")
            #
        #

        if (statistics is not None):
            size = ExperimentSpec.get_component_count(self.shops)
            trace_id = "synthetic-fgs{0:d}".format(self.fgs)

            _return = [ ResultRow(ScalabilityCell.EXPERIMENT_ID, self.planner_id, size, trace_id, "planning_time_ms", statistics.mean * 1000.0, statistics.stddev * 1000.0),
                        ResultRow(ScalabilityCell.EXPERIMENT_ID, self.planner_id, size, trace_id, "repetitions", statistics.repetitions),
                        ResultRow(ScalabilityCell.EXPERIMENT_ID, self.planner_id, size, trace_id, "issues", len(annotations))
                      ]
        #

        return _return
    #
#
