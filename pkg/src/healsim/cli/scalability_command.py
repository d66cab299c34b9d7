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
from healsim.data.experiments.trend_fit import TrendFit
from healsim.planning.planners import Planners
from healsim.tasks.cell_pool import CellPool
from healsim.tasks.scalability_cell import ScalabilityCell

from .abstract_command import AbstractCommand

class ScalabilityCommand(AbstractCommand):
    """
"scalability" measures planning times over architecture sizes and
failure group sizes and fits their growth per planner.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: cli
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    name = "scalability"
    """
Subcommand name
    """

    def __init__(self, output = None):
        """
Constructor __init__(ScalabilityCommand)

:param output: Output stream; sys.stdout if not defined

:since: v0.1.00
        """

        AbstractCommand.__init__(self, output)

        self.cells = [ ]
        """
Scalability cells
        """
        self.spec = None
        """
Experiment spec
        """
        self.workers = 1
        """
Number of worker threads
        """
    #

    def execute(self):
        """
Runs the prepared command.

:return: (int) Exit code
:since:  v0.1.00
        """

        self._prepare_output_dir(self.spec.output_dir)

        rows = CellPool(self.workers).run(self.cells)
        rows += ScalabilityCommand.get_fit_rows(rows)

        file_path_name = path.join(self.spec.output_dir, "scalability.csv")
        ResultRow.write_csv(rows, file_path_name)

        self.output.write("{0}\n".format(file_path_name))

        return 0
    #

    def prepare(self, args):
        """
Validates the parsed arguments and creates the grid cells.

:param args: Parsed arguments

:since: v0.1.00
        """

        self.spec = ExperimentSpec(ExperimentSpec.SCALABILITY,
                                   shops = self._get_list_option(args, "shops", int, [ 1, 10, 100, 1000 ]),
                                   planner_ids = self._get_list_option(args, "planner", str, list(Planners.IDS)),
                                   repetitions = self._get_option(args, "reps", int, 300),
                                   output_dir = self._get_option(args, "out", str, "."),
                                   fgs_values = self._get_list_option(args, "fgs", int, [ 1, 10, 100, 1000 ]),
                                   seeds = ( self._get_option(args, "seed", int, 0), )
                                  )

        self.workers = self._get_option(args, "workers", int, 1)

        max_seconds = self._get_option(args, "max_seconds", float, 60.0)
        k = self._get_option(args, "k", int)
        exhaustive_limit = self._get_option(args, "oracle_exhaustive_limit", int)

        populated, skipped = self.spec.get_scalability_grid()

        for planner_id, shops, fgs in skipped:
            if (self.log_handler is not None):
                self.log_handler.info("Skipped {0} with {1:d} shops: FGS {2:d} is too large", planner_id, shops, fgs, context = "cli")
            #
        #

        self.cells = [ ScalabilityCell(planner_id, shops, fgs, self.spec.repetitions, self.spec.seeds[0], max_seconds, k, exhaustive_limit)
                       for planner_id, shops, fgs in populated
                     ]
    #

    @staticmethod
    def add_arguments(parser):
        """
Adds the arguments of this subcommand to the given parser.

:param parser: Subcommand parser

:since: v0.1.00
        """

        parser.add_argument("--planner", help = "comma separated planner IDs")
        parser.add_argument("--shops", help = "comma separated architecture sizes in shops")
        parser.add_argument("--fgs", help = "comma separated failure group sizes")
        parser.add_argument("--reps", help = "maximum number of repetitions per cell")
        parser.add_argument("--max-seconds", dest = "max_seconds", help = "time budget per cell in seconds")
        parser.add_argument("--k", help = "maximum number of rules per plan")
        parser.add_argument("--oracle-exhaustive-limit", dest = "oracle_exhaustive_limit", help = "maximum number of issues the oracle solves")
        parser.add_argument("--seed", help = "random seed")
        parser.add_argument("--workers", help = "number of worker threads")
        parser.add_argument("--out", help = "output directory")
    #

    @staticmethod
    def get_fit_rows(rows):
        """
Returns the trend fit rows for each planner and architecture size with
at least three measured failure group sizes.

:param rows: Scalability result rows

:return: (list) ResultRow instances
:since:  v0.1.00
        """

        _return = [ ]
        series = { }

        for row in rows:
            if (row.metric == "planning_time_ms"):
                fgs = int(row.trace_id.rsplit("fgs", 1)[1])
                series.setdefault(( row.planner_id, row.size ), [ ]).append(( fgs, row.value ))
            #
        #

        for ( planner_id, size ), points in series.items():
            if (len(points) < 3): continue

            points.sort()
            fit = TrendFit([ point[0] for point in points ], [ point[1] for point in points ])

            _return += [ ResultRow(ScalabilityCell.EXPERIMENT_ID, planner_id, size, "fit", "fit_linear_r2", fit.linear_r2),
                         ResultRow(ScalabilityCell.EXPERIMENT_ID, planner_id, size, "fit", "fit_exponent", fit.exponent)
                       ]
        #

        return _return
    #
#
