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
import re

import numpy

from healsim.data.experiments.experiment_spec import ExperimentSpec
from healsim.data.experiments.result_row import ResultRow
from healsim.data.failure_profiles.failure_profiles import FailureProfiles
from healsim.data.failure_profiles.failure_trace import FailureTrace
from healsim.data.failure_profiles.trace_generator import TraceGenerator
from healsim.planning.planners import Planners
from healsim.simulation.simulation_config import SimulationConfig
from healsim.tasks.cell_pool import CellPool
from healsim.tasks.reward_cell import RewardCell

from .abstract_command import AbstractCommand
from .usage_exception import UsageException

class RewardCommand(AbstractCommand):
    """
"reward" simulates failure traces for each planner and success
likelihood and reports the reward of every run and the mean over seeds.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: cli
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    RE_SEED_SUFFIX = re.compile("-s\\d+$")
    """
Seed suffix of generated trace IDs
    """

    name = "reward"
    """
Subcommand name
    """

    def __init__(self, output = None):
        """
Constructor __init__(RewardCommand)

:param output: Output stream; sys.stdout if not defined

:since: v0.1.00
        """

        AbstractCommand.__init__(self, output)

        self.cells = [ ]
        """
Reward cells
        """
        self.spec = None
        """
Experiment spec
        """
        self.workers = 4
        """
Number of worker threads
        """
    #

    def _create_trace(self, args, trace_ref, seed):
        """
Returns the trace referenced by a file path or a model name.

:param args: Parsed arguments
:param trace_ref: Trace file path or model name
:param seed: Random seed

:return: (tuple) Trace ID and FailureTrace instance
:since:  v0.1.00
        """

        if (path.isfile(trace_ref)):
            trace = FailureTrace.read_csv(trace_ref)
            _return = ( trace.name, trace )
        elif (trace_ref == "synthetic"):
            fgs = self._get_option(args, "fgs", int)
            if (fgs is None): raise UsageException("--fgs is required for the synthetic model")

            trace = TraceGenerator.generate_synthetic(fgs,
                                                      self._get_option(args, "runs", int, 1),
                                                      self._get_option(args, "iat", float, 1.0),
                                                      seed
                                                     )

            _return = ( "synthetic-fgs{0:d}-s{1:d}".format(fgs, seed), trace )
        elif (trace_ref in FailureProfiles.get_names()):
            variant = self._get_option(args, "variant", str, "short")
            _return = ( "{0}-{1}-s{2:d}".format(trace_ref, variant, seed), FailureProfiles.generate(trace_ref, seed, variant) )
        else: raise UsageException("Unknown trace '{0}'".format(trace_ref))

        return _return
    #

    def execute(self):
        """
Runs the prepared command.

:return: (int) Exit code
:since:  v0.1.00
        """

        self._prepare_output_dir(self.spec.output_dir)

        rows = CellPool(self.workers).run(self.cells)
        rows += RewardCommand.get_mean_rows(rows)

        file_path_name = path.join(self.spec.output_dir, "reward.csv")
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

        seeds = self._get_list_option(args, "seed", int, [ 0 ])
        trace_refs = self._get_list_option(args, "trace", str, [ "grid5000" ])

        traces = [ ]

        for seed in seeds:
            for trace_ref in trace_refs: traces.append(( seed, ) + self._create_trace(args, trace_ref, seed))
        #

        likelihoods = self._get_list_option(args, "likelihood", float, [ 1.0 ])

        self.spec = ExperimentSpec((ExperimentSpec.LIKELIHOOD if (len(likelihoods) > 1) else ExperimentSpec.REWARD),
                                   shops = ( self._get_option(args, "shops", int, 100), ),
                                   planner_ids = self._get_list_option(args, "planner", str, list(Planners.IDS)),
                                   traces = traces,
                                   output_dir = self._get_option(args, "out", str, "."),
                                   likelihoods = likelihoods,
                                   seeds = seeds
                                  )

        self.workers = self._get_option(args, "workers", int, 4)

        base_config = SimulationConfig(shops = self.spec.shops[0],
                                       k = self._get_option(args, "k", int),
                                       planning_time_mode = self._get_option(args, "planning_time_mode", lambda value: str(value).upper(), SimulationConfig.MODE_MEASURED),
                                       planning_time_scale = self._get_option(args, "planning_time_scale", float, 1.0),
                                       oracle_exhaustive_limit = self._get_option(args, "oracle_exhaustive_limit", int),
                                       time_window = self._get_option(args, "time_window", float)
                                      )

        experiment_id = self.spec.kind.lower()
        timeline_dir = (self.spec.output_dir if (self._get_option(args, "timelines", str, "") != "") else None)

        self.cells = [ ]

        for seed, trace_id, trace in self.spec.traces:
            for likelihood in self.spec.likelihoods:
                for planner_id in self.spec.planner_ids:
                    config = base_config.copy(planner_id = planner_id, rule_success_likelihood = likelihood, seed = seed)
                    self.cells.append(RewardCell(config, trace, trace_id, experiment_id, timeline_dir))
                #
            #
        #
    #

    @staticmethod
    def add_arguments(parser):
        """
Adds the arguments of this subcommand to the given parser.

:param parser: Subcommand parser

:since: v0.1.00
        """

        parser.add_argument("--planner", help = "comma separated planner IDs")
        parser.add_argument("--shops", help = "architecture size in shops")
        parser.add_argument("--trace", help = "comma separated trace files or model names")
        parser.add_argument("--variant", choices = ( "short", "long" ), help = "trace length of realistic profiles")
        parser.add_argument("--fgs", help = "failure group size of synthetic traces")
        parser.add_argument("--runs", help = "number of failure groups of synthetic traces")
        parser.add_argument("--iat", help = "inter-arrival time in seconds of synthetic traces")
        parser.add_argument("--seed", help = "comma separated random seeds")
        parser.add_argument("--k", help = "maximum number of rules per plan")
        parser.add_argument("--time-window", dest = "time_window", help = "time window in seconds used to derive k")
        parser.add_argument("--likelihood", help = "comma separated rule success likelihoods")
        parser.add_argument("--planning-time-mode", dest = "planning_time_mode", help = "MEASURED or CALIBRATED")
        parser.add_argument("--planning-time-scale", dest = "planning_time_scale", help = "factor applied to calibrated planning times")
        parser.add_argument("--oracle-exhaustive-limit", dest = "oracle_exhaustive_limit", help = "maximum number of issues the oracle solves")
        parser.add_argument("--timelines", help = "write the timeline CSV files of every run if not empty")
        parser.add_argument("--workers", help = "number of worker threads")
        parser.add_argument("--out", help = "output directory")
    #

    @staticmethod
    def get_mean_rows(rows):
        """
Returns the mean reward over seeds per experiment, planner, trace model
and success likelihood.

:param rows: Reward result rows

:return: (list) ResultRow instances
:since:  v0.1.00
        """

        _return = [ ]

        groups = { }
        reward_row = None

        for row in rows:
            if (row.metric == "reward"): reward_row = row
            elif (row.metric == "likelihood" and reward_row is not None):
                trace_model = RewardCommand.RE_SEED_SUFFIX.sub("", reward_row.trace_id)
                key = ( reward_row.experiment_id, reward_row.planner_id, reward_row.size, trace_model, row.value )

                groups.setdefault(key, [ ]).append(reward_row.value)
                reward_row = None
            #
        #

        for ( experiment_id, planner_id, size, trace_model, likelihood ), rewards in groups.items():
            stddev = (numpy.std(rewards, ddof = 1) if (len(rewards) > 1) else 0.0)
            trace_id = "{0}-p{1:d}".format(trace_model, int(round(likelihood * 100)))

            _return.append(ResultRow(experiment_id, planner_id, size, trace_id, "reward_mean", numpy.mean(rewards), stddev))
        #

        return _return
    #
#
