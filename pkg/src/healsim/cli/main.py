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

import sys

from dNG.data.logging.log_line import LogLine
from dNG.data.traced_exception import TracedException
from dNG.runtime.value_exception import ValueException

from .analytical_command import AnalyticalCommand
from .argument_parser import ArgumentParser
from .config_file import ConfigFile
from .gen_trace_command import GenTraceCommand
from .reward_command import RewardCommand
from .scalability_command import ScalabilityCommand
from .validate_rules_command import ValidateRulesCommand

class Main(object):
    """
Command line entry point.

Exit codes are 0 on success, 1 for usage errors and 2 for runtime errors.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: cli
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    COMMANDS = ( GenTraceCommand, ScalabilityCommand, RewardCommand, AnalyticalCommand, ValidateRulesCommand )
    """
Subcommand classes
    """
    EXIT_OK = 0
    """
Success
    """
    EXIT_RUNTIME_ERROR = 2
    """
Runtime error
    """
    EXIT_USAGE_ERROR = 1
    """
Usage error
    """

    def __init__(self, output = None, error_output = None):
        """
Constructor __init__(Main)

:param output: Output stream; sys.stdout if not defined
:param error_output: Error stream; sys.stderr if not defined

:since: v0.1.00
        """

        self.error_output = (sys.stderr if (error_output is None) else error_output)
        """
Error stream
        """
        self.output = (sys.stdout if (output is None) else output)
        """
Output stream
        """
    #

    def create_parser(self):
        """
Returns the argument parser of all subcommands.

:return: (object) ArgumentParser instance
:since:  v0.1.00
        """

        _return = ArgumentParser(prog = "healsim", description = "Architectural self-healing simulator")
        _return.add_argument("--config", help = "settings file with \"key = value\" lines")

        subparsers = _return.add_subparsers(dest = "command", parser_class = ArgumentParser)

        for command_class in Main.COMMANDS:
            parser = subparsers.add_parser(command_class.name, help = command_class.__doc__.strip().splitlines()[0])
            command_class.add_arguments(parser)
        #

        return _return
    #

    def run(self, argv = None):
        """
Parses the arguments and runs the selected subcommand.

:param argv: Command line arguments; sys.argv if not defined

:return: (int) Exit code
:since:  v0.1.00
        """

        _return = None
        command = None

        try:
            args = self.create_parser().parse_args(argv)
            if (args.command is None): raise ValueException("No subcommand given")

            if (args.config is not None): ConfigFile.read(args.config)

            command = { command_class.name: command_class for command_class in Main.COMMANDS }[args.command](self.output)
            command.prepare(args)
        except ValueException as handled_exception:
            self.error_output.write("healsim: {0}\n".format(handled_exception))
            _return = Main.EXIT_USAGE_ERROR
        except TracedException as handled_exception:
            self.error_output.write("healsim: {0}\n".format(handled_exception))
            _return = Main.EXIT_RUNTIME_ERROR
        #

        if (_return is None):
            try: _return = command.execute()
            except Exception as handled_exception:
                LogLine.error(handled_exception, context = "cli")
                self.error_output.write("healsim: {0}\n".format(handled_exception))

                _return = Main.EXIT_RUNTIME_ERROR
            #
        #

        return _return
    #
#

def main(argv = None):
    """
Runs the command line interface.

:param argv: Command line arguments; sys.argv if not defined

:return: (int) Exit code
:since:  v0.1.00
    """

    return Main().run(argv)
#
