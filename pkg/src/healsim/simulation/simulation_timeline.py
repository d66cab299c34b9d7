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
from math import fsum
import csv

from dNG.runtime.io_exception import IOException
from dNG.runtime.value_exception import ValueException

class SimulationTimeline(object):
    """
Utility over virtual time as ordered breakpoints together with the records
of the MAPE runs. Utility is constant between breakpoints.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: simulation
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    RECORDS_CSV_HEADER = ( "run", "trigger_s", "analyze_ms", "plan_ms", "exec_ms", "issues", "rules_ok", "rules_failed" )
    """
Run records CSV column names
    """
    UTILITY_CSV_HEADER = ( "time_s", "utility" )
    """
Utility CSV column names
    """

    def __init__(self, initial_utility = None):
        """
Constructor __init__(SimulationTimeline)

:param initial_utility: Utility at time 0

:since: v0.1.00
        """

        self.breakpoints = [ ]
        """
List of ( time, utility ) tuples
        """
        self.end_time = 0.0
        """
Virtual time the simulation ended
        """
        self.initial_utility = initial_utility
        """
Utility at time 0 before any failure
        """
        self.records = [ ]
        """
MAPE run records
        """

        if (initial_utility is not None): self.add_breakpoint(0.0, initial_utility)
    #

    def add_breakpoint(self, time, utility):
        """
Records the utility from the given time on. Breakpoints at equal times
are merged.

:param time: Virtual time
:param utility: Utility

:since: v0.1.00
        """

        if (len(self.breakpoints) > 0):
            last_time = self.breakpoints[-1][0]

            if (time < last_time): raise ValueException("Breakpoint at {0!r} precedes {1!r}".format(time, last_time))
            if (time == last_time): self.breakpoints.pop()
        #

        self.breakpoints.append(( time, utility ))
        self.end_time = max(self.end_time, time)
    #

    def export_records(self):
        """
Exports the MAPE run records as CSV.

:return: (str) CSV data
:since:  v0.1.00
        """

        output = StringIO()
        writer = csv.writer(output, lineterminator = "\n")

        writer.writerow(SimulationTimeline.RECORDS_CSV_HEADER)

        for record in self.records:
            writer.writerow(( record.run,
                              repr(record.trigger_time),
                              repr(record.analyze_duration * 1000.0),
                              repr(record.plan_duration * 1000.0),
                              repr(record.execute_duration * 1000.0),
                              record.issues_found,
                              record.rules_ok,
                              record.rules_failed
                            ))
        #

        return output.getvalue()
    #

    def export_utility(self):
        """
Exports the utility breakpoints as CSV.

:return: (str) CSV data
:since:  v0.1.00
        """

        output = StringIO()
        writer = csv.writer(output, lineterminator = "\n")

        writer.writerow(SimulationTimeline.UTILITY_CSV_HEADER)
        for time, utility in self.breakpoints: writer.writerow(( repr(time), repr(utility) ))

        return output.getvalue()
    #

    def get_final_utility(self):
        """
Returns the utility after the last breakpoint.

:return: (float) Utility
:since:  v0.1.00
        """

        if (len(self.breakpoints) < 1): raise ValueException("Timeline is empty")
        return self.breakpoints[-1][1]
    #

    def get_utility_at(self, time):
        """
Returns the utility at the given virtual time.

:param time: Virtual time

:return: (float) Utility
:since:  v0.1.00
        """

        if (len(self.breakpoints) < 1 or time < self.breakpoints[0][0]): raise ValueException("Timeline does not cover {0!r}".format(time))

        _return = self.breakpoints[0][1]

        for breakpoint_time, utility in self.breakpoints:
            if (breakpoint_time > time): break
            _return = utility
        #

        return _return
    #

    def reward(self, t0 = None, t1 = None):
        """
Returns the utility integrated over [t0, t1]. The last utility extends
beyond the last breakpoint.

:param t0: Start time; first breakpoint if not defined
:param t1: End time; simulation end if not defined

:return: (float) Reward
:since:  v0.1.00
        """

        if (len(self.breakpoints) < 1): raise ValueException("Timeline is empty")

        if (t0 is None): t0 = self.breakpoints[0][0]
        if (t1 is None): t1 = self.end_time

        if (t0 < self.breakpoints[0][0]): raise ValueException("Timeline does not cover {0!r}".format(t0))
        if (t1 < t0): raise ValueException("Reward interval is empty")

        areas = [ ]

        for index, ( time, utility ) in enumerate(self.breakpoints):
            next_time = (self.breakpoints[index + 1][0] if (index + 1 < len(self.breakpoints)) else t1)

            start = max(time, t0)
            end = min(next_time, t1)

            if (end > start): areas.append(utility * (end - start))
        #

        return fsum(areas)
    #

    def write_csv(self, utility_file_path_name, records_file_path_name = None):
        """
Writes the utility breakpoints and optionally the run records to CSV
files.

:param utility_file_path_name: Utility CSV file path and name
:param records_file_path_name: Run records CSV file path and name

:since: v0.1.00
        """

        files = [ ( utility_file_path_name, self.export_utility() ) ]
        if (records_file_path_name is not None): files.append(( records_file_path_name, self.export_records() ))

        for file_path_name, data in files:
            try:
                with open(file_path_name, "w", encoding = "utf-8", newline = "") as file_obj: file_obj.write(data)
            except OSError as handled_exception: raise IOException("Failed to write timeline '{0}'".format(file_path_name), _exception = handled_exception)
        #
    #
#
