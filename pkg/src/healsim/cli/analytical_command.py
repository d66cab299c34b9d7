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
from healsim.planning.planners import Planners
from healsim.simulation.analytical_scenarios import AnalyticalScenarios

from .abstract_command import AbstractCommand
from .usage_exception import UsageException

class AnalyticalCommand(AbstractCommand):
    """
"analytical" replays a scripted scenario for each planner and writes the
utility timelines.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: cli
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    name = "analytical"
    """
Subcommand name
    """

    def __init__(self, output = None):
        """
Constructor __init__(AnalyticalCommand)

:param output: Output stream; sys.stdout if not defined

:since: v0.1.00
        """

        AbstractCommand.__init__(self, output)

        self.scenario_id = None
        """
Scenario ID
        """
        self.spec = None
        """
Experiment spec
        """
    #

    def execute(self):
        """
Runs the prepared command.

:return: (int) Exit code
:since:  v0.1.00
        """

        self._prepare_output_dir(self.spec.output_dir)

        timelines = AnalyticalScenarios.run(self.scenario_id, self.spec.planner_ids)
        size = ExperimentSpec.get_component_count(AnalyticalScenarios.SHOPS)

        rows = [ ]

        for planner_id, timeline in timelines.items():
            prefix = path.join(self.spec.output_dir, "{0}_{1}".format(self.scenario_id, planner_id))
            timeline.write_csv("{0}_utility.csv".format(prefix), "{0}_runs.csv".format(prefix))

            rows += [ ResultRow("analytical", planner_id, size, self.scenario_id, "reward", timeline.reward(0.0, AnalyticalScenarios.HORIZON)),
                      ResultRow("analytical", planner_id, size, self.scenario_id, "final_utility", timeline.get_final_utility()),
                      ResultRow("analytical", planner_id, size, self.scenario_id, "mape_runs", len(timeline.records))
                    ]
        #

        file_path_name = path.join(self.spec.output_dir, "{0}.csv".format(self.scenario_id))
        ResultRow.write_csv(rows, file_path_name)

        self.output.write(ResultRow.export(rows))

        return 0
    #

    def prepare(self, args):
        """
Validates the parsed arguments.

:param args: Parsed arguments

:since: v0.1.00
        """

        if (args.scenario not in AnalyticalScenarios.IDS and args.scenario not in AnalyticalScenarios.ALIASES):
            raise UsageException("Unknown scenario '{0}'".format(args.scenario))
        #

        self.scenario_id = args.scenario

        self.spec = ExperimentSpec(ExperimentSpec.ANALYTICAL,
                                   shops = ( AnalyticalScenarios.SHOPS, ),
                                   planner_ids = self._get_list_option(args, "planner", str, list(Planners.IDS)),
                                   output_dir = self._get_option(args, "out", str, ".")
                                  )
    #

    @staticmethod
    def add_arguments(parser):
        """
Adds the arguments of this subcommand to the given parser.

:param parser: Subcommand parser

:since: v0.1.00
        """

        parser.add_argument("scenario", help = ", ".join(AnalyticalScenarios.IDS + tuple(AnalyticalScenarios.ALIASES)))
        parser.add_argument("--planner", help = "comma separated planner IDs")
        parser.add_argument("--out", help = "output directory")
    #
#
