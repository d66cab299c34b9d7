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

from io import StringIO
import csv

from dNG.runtime.io_exception import IOException
from dNG.runtime.value_exception import ValueException

from .failure_trace_entry import FailureTraceEntry

class FailureTrace(object):
    """
A time ordered list of failures together with the failure groups they
were generated from and the parameters describing their provenance.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: failure_profiles
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    CSV_HEADER = ( "time_s", "cf_kind", "target_selector" )
    """
CSV column names
    """

    def __init__(self, entries, duration, name = "custom", seed = None, parameters = None, bursts = None):
        """
Constructor __init__(FailureTrace)

:param entries: Failure trace entries
:param duration: Trace duration in seconds
:param name: Trace name
:param seed: Seed used to generate the trace
:param parameters: List of ( key, value ) provenance tuples
:param bursts: List of ( start time, group size ) tuples

:since: v0.1.00
        """

        self.bursts = ([ ] if (bursts is None) else list(bursts))
        """
List of ( start time, group size ) tuples
        """
        self.duration = float(duration)
        """
Trace duration in seconds
        """
        self.entries = sorted(entries, key = lambda entry: entry.time)
        """
Failure trace entries ordered by time
        """
        self.name = name
        """
Trace name
        """
        self.parameters = ([ ] if (parameters is None) else list(parameters))
        """
List of ( key, value ) provenance tuples
        """
        self.seed = seed
        """
Seed used to generate the trace
        """

        if (len(self.entries) > 0 and self.entries[-1].time > self.duration):
            raise ValueException("Failure at {0!r} is beyond the trace duration".format(self.entries[-1].time))
        #
    #

    def __iter__(self):
        """
python.org: Return an iterator object.

:return: (object) Iterator
:since:  v0.1.00
        """

        return iter(self.entries)
    #

    def __len__(self):
        """
python.org: Called to implement the built-in function len().

:return: (int) Number of failures
:since:  v0.1.00
        """

        return len(self.entries)
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<FailureTrace {0} d={1:d} n={2:d}>".format(self.name, len(self.entries), len(self.bursts))
    #

    def export(self):
        """
Exports the trace as CSV with the provenance given as "#" comment lines.

:return: (str) CSV data
:since:  v0.1.00
        """

        output = StringIO()

        output.write("# trace={0}\n".format(self.name))
        if (self.seed is not None): output.write("# seed={0}\n".format(self.seed))
        output.write("# duration_s={0!r}\n".format(self.duration))

        for key, value in self.parameters: output.write("# {0}={1}\n".format(key, value))

        if (len(self.bursts) > 0):
            output.write("# bursts={0}\n".format(";".join("{0!r}:{1:d}".format(start, size) for start, size in self.bursts)))
        #

        writer = csv.writer(output, lineterminator = "\n")
        writer.writerow(FailureTrace.CSV_HEADER)

        for entry in self.entries: writer.writerow(( repr(entry.time), entry.cf_kind, entry.get_selector_string() ))

        return output.getvalue()
    #

    def get_burst_starts(self):
        """
Returns the start times of the failure groups.

:return: (list) Start times
:since:  v0.1.00
        """

        return [ start for start, _ in self.bursts ]
    #

    def get_density(self):
        """
Returns the number of failures.

:return: (int) Number of failures
:since:  v0.1.00
        """

        return len(self.entries)
    #

    def get_group_sizes(self):
        """
Returns the failure group sizes.

:return: (list) Group sizes
:since:  v0.1.00
        """

        return [ size for _, size in self.bursts ]
    #

    def get_parameter(self, key, default = None):
        """
Returns the provenance parameter with the given key.

:param key: Parameter key
:param default: Default value if not set

:return: (str) Parameter value
:since:  v0.1.00
        """

        _return = default

        for parameter_key, value in self.parameters:
            if (parameter_key == key):
                _return = value
                break
            #
        #

        return _return
    #

    def write_csv(self, file_path_name):
        """
Writes the trace to the given CSV file.

:param file_path_name: CSV file path and name

:since: v0.1.00
        """

        try:
            with open(file_path_name, "w", encoding = "utf-8", newline = "") as file_obj: file_obj.write(self.export())
        except OSError as handled_exception: raise IOException("Failed to write trace '{0}'".format(file_path_name), _exception = handled_exception)
    #

    @staticmethod
    def import_csv(data, name = None):
        """
Imports a trace from CSV data written by "export()".

:param data: CSV data
:param name: Trace name overriding the provenance one

:return: (object) FailureTrace instance
:since:  v0.1.00
        """

        bursts = [ ]
        duration = None
        parameters = [ ]
        seed = None
        trace_name = "custom"

        body_lines = [ ]

        for line in data.splitlines():
            if (line.startswith("#")):
                if ("=" not in line): continue
                key, value = line[1:].strip().split("=", 1)

                if (key == "trace"): trace_name = value
                elif (key == "seed"): seed = value
                elif (key == "duration_s"): duration = float(value)
                elif (key == "bursts"):
                    for burst in value.split(";"):
                        start, size = burst.split(":", 1)
                        bursts.append(( float(start), int(size) ))
                    #
                else: parameters.append(( key, value ))
            elif (line.strip() != ""): body_lines.append(line)
        #

        reader = csv.reader(body_lines)
        header = next(reader, None)
        if (header is None or tuple(header) != FailureTrace.CSV_HEADER): raise IOException("Failure trace CSV header is missing")

        entries = [ ]

        for row in reader:
            if (len(row) != 3): raise IOException("Malformed failure trace row '{0}'".format(",".join(row)))

            try: entries.append(FailureTraceEntry(float(row[0]), row[1], row[2]))
            except (ValueError, ValueException) as handled_exception: raise IOException("Malformed failure trace row '{0}'".format(",".join(row)), _exception = handled_exception)
        #

        if (duration is None): duration = (entries[-1].time if (len(entries) > 0) else 0.0)
        if (seed is not None and seed.lstrip("-").isdigit()): seed = int(seed)

        return FailureTrace(entries, duration, (trace_name if (name is None) else name), seed, parameters, bursts)
    #

    @staticmethod
    def read_csv(file_path_name, name = None):
        """
Reads a trace from the given CSV file.

:param file_path_name: CSV file path and name
:param name: Trace name overriding the provenance one

:return: (object) FailureTrace instance
:since:  v0.1.00
        """

        try:
            with open(file_path_name, "r", encoding = "utf-8") as file_obj: data = file_obj.read()
        except OSError as handled_exception: raise IOException("Failed to read trace '{0}'".format(file_path_name), _exception = handled_exception)

        return FailureTrace.import_csv(data, name)
    #
#
