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

from dNG.data.settings import Settings
from dNG.runtime.io_exception import IOException
from dNG.runtime.value_exception import ValueException

class ConfigFile(object):
    """
Reads "key = value" settings files mirroring the command line options.
Keys are stored with the "healsim_" prefix and dashes replaced by
underscores.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: cli
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    RE_LINE = re.compile("^\\s*([\\w\\.\\-]+)\\s*[=:]\\s*(.*?)\\s*$")
    """
RegExp to parse "key = value" lines
    """

    @staticmethod
    def parse_value(value):
        """
Returns the typed value of the given text.

:param value: Text value

:return: (mixed) Boolean, integer, float or string value
:since:  v0.1.00
        """

        lower_value = value.lower()

        if (lower_value in ( "true", "yes", "on" )): _return = True
        elif (lower_value in ( "false", "no", "off" )): _return = False
        else:
            try: _return = int(value)
            except ValueError:
                try: _return = float(value)
                except ValueError: _return = value
            #
        #

        return _return
    #

    @staticmethod
    def read(file_path_name):
        """
Reads the given settings file. Empty lines and lines starting with "#" or
";" are ignored.

:param file_path_name: Settings file path and name

:return: (list) Keys set
:since:  v0.1.00
        """

        if (not path.isfile(file_path_name)): raise IOException("Settings file '{0}' is not readable".format(file_path_name))

        try:
            with open(file_path_name, "r", encoding = "utf-8") as file_obj: lines = file_obj.readlines()
        except (OSError, UnicodeDecodeError) as handled_exception:
            raise IOException("Settings file '{0}' is not readable".format(file_path_name), _exception = handled_exception)
        #

        _return = [ ]

        for line_number, line in enumerate(lines, 1):
            line = line.strip()
            if (line == "" or line[0] in "#;"): continue

            re_result = ConfigFile.RE_LINE.match(line)
            if (re_result is None): raise ValueException("Settings file '{0}' line {1:d} is invalid".format(file_path_name, line_number))

            key = re_result.group(1).replace("-", "_")
            if (not key.startswith("healsim_")): key = "healsim_{0}".format(key)

            Settings.set(key, ConfigFile.parse_value(re_result.group(2)))
            _return.append(key)
        #

        return _return
    #
#
