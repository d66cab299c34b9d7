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

from math import log10

from dNG.runtime.value_exception import ValueException

class CalibratedPlanningTime(object):
    """
Planning times measured for the marketplace by architecture size and
number of failures. Values in between are interpolated log-log, values
outside the grid are extrapolated from the nearest segment.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    COMPONENTS = ( 18, 180, 1800, 18000 )
    """
Architecture sizes measured
    """
    FAILURES = ( 1, 10, 100, 1000 )
    """
Failure group sizes measured
    """
    TABLE_MS = { "static": ( ( 0.76, 10.37, None, None ),
                             ( 0.68, 9.71, 14.22, None ),
                             ( 0.61, 10.60, 13.82, 54.50 ),
                             ( 0.65, 10.14, 21.80, 127.80 )
                           ),
                 "u-driven": ( ( 0.89, 14.36, None, None ),
                               ( 0.89, 13.58, 17.70, None ),
                               ( 0.74, 13.47, 26.65, 60.09 ),
                               ( 0.71, 13.87, 26.38, 171.31 )
                             ),
                 "oracle": ( ( 5.02, 55.68, None, None ),
                             ( 5.01, 59.07, 219.54, None ),
                             ( 4.83, 58.24, 211.09, 3216.60 ),
                             ( 4.90, 71.93, 271.51, 3611.95 )
                           )
               }
    """
Planning times in milliseconds per planner, architecture size (rows) and
failure group size (columns)
    """

    @staticmethod
    def estimate(planner_id, components, failures):
        """
Returns the calibrated planning time.

:param planner_id: Planner ID
:param components: Number of components
:param failures: Number of issues planned; values below 1 use the time of
                 a single failure

:return: (float) Planning time in seconds
:since:  v0.1.00
        """

        table = CalibratedPlanningTime.TABLE_MS.get(planner_id)
        if (table is None): raise ValueException("No calibrated planning times for planner '{0}'".format(planner_id))
        if (components < 1): raise ValueException("Architecture size must be positive")

        failures = max(1, failures)
        row_values = [ ]

        for row in table:
            points = [ ( log10(failure_count), log10(value) )
                       for failure_count, value in zip(CalibratedPlanningTime.FAILURES, row)
                       if value is not None
                     ]

            row_values.append(CalibratedPlanningTime._interpolate(points, log10(failures)))
        #

        _return = CalibratedPlanningTime._interpolate([ ( log10(component_count), value ) for component_count, value in zip(CalibratedPlanningTime.COMPONENTS, row_values) ],
                                                      log10(components)
                                                     )

        return (10 ** _return) / 1000.0
    #

    @staticmethod
    def _interpolate(points, x):
        """
Interpolates linearly between the given points or extrapolates the
nearest segment.

:param points: Sorted list of ( x, y ) tuples
:param x: Position

:return: (float) Value at x
:since:  v0.1.00
        """

        if (len(points) == 1): _return = points[0][1]
        else:
            index = 0
            while (index < len(points) - 2 and x > points[index + 1][0]): index += 1

            ( x0, y0 ), ( x1, y1 ) = points[index], points[index + 1]
            _return = y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        #

        return _return
    #
#
