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

import numpy

from dNG.runtime.io_exception import IOException
from dNG.runtime.value_exception import ValueException

class ResultRow(object):
    """
One metric value of an experiment cell.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: experiments
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    CSV_HEADER = ( "experiment", "planner", "size", "trace", "metric", "value", "stddev" )
    """
Results CSV column names
    """

    def __init__(self, experiment_id, planner_id, size, trace_id, metric, value, stddev = 0.0):
        """
Constructor __init__(ResultRow)

:param experiment_id: Experiment ID
:param planner_id: Planner ID
:param size: Architecture size in components
:param trace_id: Trace ID
:param metric: Metric name
:param value: Metric value
:param stddev: Standard deviation of the value

:since: v0.1.00
        """

        if (not numpy.isfinite(value)): raise ValueException("Value of {0} is not finite".format(metric))
        if (not numpy.isfinite(stddev)): raise ValueException("Standard deviation of {0} is not finite".format(metric))

        self.experiment_id = experiment_id
        """
Experiment ID
        """
        self.metric = metric
        """
Metric name
        """
        self.planner_id = planner_id
        """
Planner ID
        """
        self.size = size
        """
Architecture size in components
        """
        self.stddev = float(stddev)
        """
Standard deviation of the value
        """
        self.trace_id = trace_id
        """
Trace ID
        """
        self.value = float(value)
        """
Metric value
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<ResultRow {0} {1} {2!r} {3} {4}={5!r}>".format(self.experiment_id,
                                                                self.planner_id,
                                                                self.size,
                                                                self.trace_id,
                                                                self.metric,
                                                                self.value
                                                               )
    #

    def get_csv_values(self):
        """
Returns the values of this row in CSV column order.

:return: (tuple) Values
:since:  v0.1.00
        """

        return ( self.experiment_id,
                 self.planner_id,
                 self.size,
                 self.trace_id,
                 self.metric,
                 repr(self.value),
                 repr(self.stddev)
               )
    #

    @staticmethod
    def export(rows):
        """
Exports the given rows as CSV.

:param rows: ResultRow instances

:return: (str) CSV data
:since:  v0.1.00
        """

        output = StringIO()
        writer = csv.writer(output, lineterminator = "\n")

        writer.writerow(ResultRow.CSV_HEADER)
        for row in rows: writer.writerow(row.get_csv_values())

        return output.getvalue()
    #

    @staticmethod
    def write_csv(rows, file_path_name):
        """
Writes the given rows to a CSV file.

:param rows: ResultRow instances
:param file_path_name: CSV file path and name

:since: v0.1.00
        """

        try:
            with open(file_path_name, "w", encoding = "utf-8", newline = "") as file_obj: file_obj.write(ResultRow.export(rows))
        except OSError as handled_exception: raise IOException("Failed to write results '{0}'".format(file_path_name), _exception = handled_exception)
    #
#
