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

from healsim.data.failure_profiles.distribution import Distribution
from healsim.data.failure_profiles.failure_profile_model import FailureProfileModel
from healsim.data.failure_profiles.failure_profiles import FailureProfiles
from healsim.data.failure_profiles.trace_generator import TraceGenerator

from .abstract_command import AbstractCommand
from .usage_exception import UsageException

class GenTraceCommand(AbstractCommand):
    """
"gen-trace" writes a failure trace of a profile, of the synthetic model or
of explicitly given distributions.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: cli
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    CUSTOM = "custom"
    """
Model name of explicitly given distributions
    """
    SYNTHETIC = "synthetic"
    """
Synthetic model name
    """

    name = "gen-trace"
    """
Subcommand name
    """

    def __init__(self, output = None):
        """
Constructor __init__(GenTraceCommand)

:param output: Output stream; sys.stdout if not defined

:since: v0.1.00
        """

        AbstractCommand.__init__(self, output)

        self.file_path_name = None
        """
Trace file path and name; standard output if not defined
        """
        self.trace = None
        """
Generated failure trace
        """
    #

    def execute(self):
        """
Runs the prepared command.

:return: (int) Exit code
:since:  v0.1.00
        """

        if (self.file_path_name is None): self.output.write(self.trace.export())
        else:
            self.trace.write_csv(self.file_path_name)
            if (self.log_handler is not None): self.log_handler.info("{0!r} written to {1}", self.trace, self.file_path_name, context = "cli")
        #

        return 0
    #

    def _get_profile(self, args):
        """
Returns the failure profile model defined by explicit distributions.

:param args: Parsed arguments

:return: (object) FailureProfileModel instance
:since:  v0.1.00
        """

        for name in ( "fgs_dist", "iat_dist", "bursts", "duration" ):
            if (self._get_option(args, name) is None): raise UsageException("--{0} is required for the custom model".format(name.replace("_", "-")))
        #

        return FailureProfileModel(GenTraceCommand.CUSTOM,
                                   Distribution.parse(self._get_option(args, "fgs_dist")),
                                   Distribution.parse(self._get_option(args, "iat_dist")),
                                   self._get_option(args, "fet", float, 0.0),
                                   self._get_option(args, "bursts", int),
                                   self._get_option(args, "duration", float),
                                   self._get_option(args, "density", int)
                                  )
    #

    def prepare(self, args):
        """
Validates the parsed arguments and generates the trace.

:param args: Parsed arguments

:since: v0.1.00
        """

        model = args.model
        seed = self._get_option(args, "seed", int, 0)

        if (model == GenTraceCommand.SYNTHETIC):
            fgs = self._get_option(args, "fgs", int)
            if (fgs is None): raise UsageException("--fgs is required for the synthetic model")

            runs = self._get_option(args, "runs", int, 1)
            iat = self._get_option(args, "iat", float, 1.0)

            self.trace = TraceGenerator.generate_synthetic(fgs, runs, iat, seed)
        elif (model == GenTraceCommand.CUSTOM): self.trace = TraceGenerator.generate_realistic(self._get_profile(args), seed)
        elif (model in FailureProfiles.get_names()):
            self.trace = FailureProfiles.generate(model, seed, self._get_option(args, "variant", str, "short"))
        else: raise UsageException("Unknown failure profile model '{0}'".format(model))

        self.file_path_name = getattr(args, "out", None)
    #

    @staticmethod
    def add_arguments(parser):
        """
Adds the arguments of this subcommand to the given parser.

:param parser: Subcommand parser

:since: v0.1.00
        """

        parser.add_argument("model", help = "synthetic, custom, lri, deug, grid5000, uniform, single or bigburst")
        parser.add_argument("--variant", choices = ( "short", "long" ), help = "trace length of realistic profiles")
        parser.add_argument("--fgs", help = "failure group size of the synthetic model")
        parser.add_argument("--runs", help = "number of failure groups of the synthetic model")
        parser.add_argument("--iat", help = "inter-arrival time in seconds of the synthetic model")
        parser.add_argument("--fgs-dist", dest = "fgs_dist", help = "failure group size distribution of the custom model, e.g. \"LOGN(1.88,1.25)\"")
        parser.add_argument("--iat-dist", dest = "iat_dist", help = "inter-arrival time distribution in seconds of the custom model")
        parser.add_argument("--fet", help = "failure event time window in seconds of the custom model")
        parser.add_argument("--bursts", help = "number of failure groups of the custom model")
        parser.add_argument("--duration", help = "trace duration in seconds of the custom model")
        parser.add_argument("--density", help = "number of failures the custom group sizes are normalized to")
        parser.add_argument("--seed", help = "random seed")
        parser.add_argument("--out", help = "trace CSV file; standard output if not given")
    #
#
