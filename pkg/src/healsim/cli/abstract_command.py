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

from os import makedirs, path
import sys

from dNG.data.settings import Settings
from dNG.data.traced_exception import TracedException
from dNG.module.named_loader import NamedLoader
from dNG.runtime.io_exception import IOException

from .usage_exception import UsageException

class AbstractCommand(object):
    """
A CLI subcommand. Arguments are validated by "prepare()" before
"execute()" runs the command.

Every flag is parsed as a string. A flag not given on the command line
falls back to the setting of the same name read from the config file.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: cli
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    name = None
    """
Subcommand name
    """

    def __init__(self, output = None):
        """
Constructor __init__(AbstractCommand)

:param output: Output stream; sys.stdout if not defined

:since: v0.1.00
        """

        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.output = (sys.stdout if (output is None) else output)
        """
Output stream
        """
    #

    def execute(self):
        """
Runs the prepared command.

:return: (int) Exit code
:since:  v0.1.00
        """

        raise TracedException("Not implemented")
    #

    def _get_option(self, args, name, converter = str, default = None):
        """
Returns the typed value of the given option.

:param args: Parsed arguments
:param name: Option name with underscores
:param converter: Callable converting the raw value
:param default: Default value

:return: (mixed) Option value
:since:  v0.1.00
        """

        value = getattr(args, name, None)
        if (value is None): value = Settings.get("healsim_{0}".format(name))

        if (value is None): _return = default
        else:
            try: _return = converter(value)
            except (TypeError, ValueError) as handled_exception:
                raise UsageException("Invalid value '{0}' for --{1}".format(value, name.replace("_", "-")), _exception = handled_exception)
            #
        #

        return _return
    #

    def _get_list_option(self, args, name, converter = str, default = None):
        """
Returns the typed values of a comma separated option.

:param args: Parsed arguments
:param name: Option name with underscores
:param converter: Callable converting each value
:param default: Default value

:return: (list) Option values
:since:  v0.1.00
        """

        return self._get_option(args,
                                name,
                                lambda value: [ converter(item.strip()) for item in str(value).split(",") if item.strip() != "" ],
                                default
                               )
    #

    def _prepare_output_dir(self, output_dir):
        """
Creates the given output directory if required.

:param output_dir: Output directory

:since: v0.1.00
        """

        try: makedirs(output_dir, exist_ok = True)
        except OSError as handled_exception: raise IOException("Failed to create output directory '{0}'".format(output_dir), _exception = handled_exception)

        if (not path.isdir(output_dir)): raise IOException("Output path '{0}' is not a directory".format(output_dir))
    #

    def prepare(self, args):
        """
Validates the parsed arguments.

:param args: Parsed arguments

:since: v0.1.00
        """

        raise TracedException("Not implemented")
    #

    @staticmethod
    def add_arguments(parser):
        """
Adds the arguments of this subcommand to the given parser.

:param parser: Subcommand parser

:since: v0.1.00
        """

        pass
    #
#
