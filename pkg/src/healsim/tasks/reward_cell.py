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

from os import path

from healsim.data.experiments.experiment_spec import ExperimentSpec
from healsim.data.experiments.result_row import ResultRow
from healsim.simulation.simulator import Simulator

from .abstract_cell import AbstractCell

class RewardCell(AbstractCell):
    """
Simulates one failure trace with one planner configuration and returns
the reward and run statistics.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: tasks
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, config, trace, trace_id = None, experiment_id = "reward", output_dir = None):
        """
Constructor __init__(RewardCell)

:param config: Simulation config
:param trace: Failure trace
:param trace_id: Trace ID of the result rows; the trace name if not
                 defined
:param experiment_id: Experiment ID of the result rows
:param output_dir: Directory the timeline CSV files are written to

:since: v0.1.00
        """

        AbstractCell.__init__(self)

        self.config = config
        """
Simulation config
        """
        self.experiment_id = experiment_id
        """
Experiment ID of the result rows
        """
        self.output_dir = output_dir
        """
Directory the timeline CSV files are written to
        """
        self.timeline = None
        """
Timeline of the last run
        """
        self.trace = trace
        """
Failure trace
        """
        self.trace_id = (trace.name if (trace_id is None) else trace_id)
        """
Trace ID of the result rows
        """

        self.context_id = "healsim.tasks.RewardCell.{0}.{1}.{2!r}".format(config.planner_id, self.trace_id, config.rule_success_likelihood)
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<RewardCell {0}>".format(self.context_id)
    #

    def get_file_prefix(self):
        """
Returns the file name prefix of the timeline CSV files.

:return: (str) File name prefix
:since:  v0.1.00
        """

        return "{0}_{1}_{2}_p{3:d}".format(self.experiment_id,
                                           self.trace_id,
                                           self.config.planner_id,
                                           int(round(self.config.rule_success_likelihood * 100))
                                          )
    #

    def _run(self):
        """
Cell specific implementation of "run()".

:return: (list) ResultRow instances
:since:  v0.1.00
        """

        self.timeline = Simulator.run_simulation(self.config, self.trace)

        if (self.output_dir is not None):
            prefix = path.join(self.output_dir, self.get_file_prefix())
            self.timeline.write_csv("{0}_utility.csv".format(prefix), "{0}_runs.csv".format(prefix))
        #

        size = ExperimentSpec.get_component_count(self.config.shops)
        records = self.timeline.records

        values = ( ( "reward", self.timeline.reward(0.0, self.trace.duration) ),
                   ( "final_utility", self.timeline.get_final_utility() ),
                   ( "mape_runs", len(records) ),
                   ( "rules_ok", sum(record.rules_ok for record in records) ),
                   ( "rules_failed", sum(record.rules_failed for record in records) ),
                   ( "likelihood", self.config.rule_success_likelihood )
                 )

        return [ ResultRow(self.experiment_id, self.config.planner_id, size, self.trace_id, metric, value) for metric, value in values ]
    #
#
