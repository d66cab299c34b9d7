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

from time import perf_counter

import numpy

from dNG.runtime.value_exception import ValueException

class PlanningTimeStatistics(object):
    """
Wall clock planning time statistics of repeated planner invocations.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: simulation
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    MIN_BUDGET_REPETITIONS = 3
    """
Repetitions required before the time budget may end a measurement
    """
    MIN_REPETITIONS = 30
    """
Repetitions required before the deviation may end a measurement
    """
    RELATIVE_STDDEV_THRESHOLD = 0.05
    """
Relative standard deviation ending a measurement
    """

    def __init__(self, samples):
        """
Constructor __init__(PlanningTimeStatistics)

:param samples: Planning times in seconds

:since: v0.1.00
        """

        self.samples = numpy.asarray(samples, dtype = float)
        """
Planning times in seconds
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<PlanningTimeStatistics mean={0!r} stddev={1!r} reps={2:d}>".format(self.mean, self.stddev, self.repetitions)
    #

    @property
    def mean(self):
        """
Returns the mean planning time.

:return: (float) Mean in seconds
:since:  v0.1.00
        """

        return float(numpy.mean(self.samples))
    #

    @property
    def repetitions(self):
        """
Returns the number of repetitions measured.

:return: (int) Repetitions
:since:  v0.1.00
        """

        return len(self.samples)
    #

    @property
    def stddev(self):
        """
Returns the sample standard deviation of the planning time.

:return: (float) Standard deviation in seconds
:since:  v0.1.00
        """

        return (float(numpy.std(self.samples, ddof = 1)) if (len(self.samples) > 1) else 0.0)
    #

    def is_stable(self):
        """
Returns true if the relative standard deviation is below the threshold.

:return: (bool) True if stable
:since:  v0.1.00
        """

        mean = self.mean
        return (mean > 0 and self.stddev / mean < PlanningTimeStatistics.RELATIVE_STDDEV_THRESHOLD)
    #

    @staticmethod
    def measure(planner, annotations, model, repetitions = 300, max_seconds = None):
        """
Measures the planning time of the given planner. The measurement stops
after the given repetitions, once the deviation is small enough or once
the time budget is spent.

:param planner: Planner instance
:param annotations: Annotations with the issues to plan for
:param model: Architecture model
:param repetitions: Maximum number of repetitions
:param max_seconds: Time budget in seconds

:return: (object) PlanningTimeStatistics instance
:since:  v0.1.00
        """

        if (repetitions < 1): raise ValueException("At least one repetition is required")

        samples = [ ]
        start_time = perf_counter()

        while (len(samples) < repetitions):
            samples.append(planner.plan(annotations, model).planning_time)
            _return = PlanningTimeStatistics(samples)

            if (len(samples) >= PlanningTimeStatistics.MIN_REPETITIONS and _return.is_stable()): break

            if (max_seconds is not None
                and len(samples) >= PlanningTimeStatistics.MIN_BUDGET_REPETITIONS
                and perf_counter() - start_time >= max_seconds
               ): break
        #

        return _return
    #
#
