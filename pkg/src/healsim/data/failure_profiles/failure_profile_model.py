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

from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.failure_kind import FailureKind

class FailureProfileModel(object):
    """
Parameters of a failure profile: distributions of failure group sizes and
inter-arrival times, the failure event time window of a group, the number
of groups and the trace duration.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: failure_profiles
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, name, fgs, iat, fet, burst_count, duration, density = None, iat_rescaled = False, cf_kinds = None):
        """
Constructor __init__(FailureProfileModel)

:param name: Profile name
:param fgs: Failure group size distribution
:param iat: Inter-arrival time distribution in seconds
:param fet: Failure event time window in seconds
:param burst_count: Number of failure groups
:param duration: Trace duration in seconds
:param density: Target number of failures; None to keep sampled sizes
:param iat_rescaled: True to stretch group starts onto the whole duration
:param cf_kinds: Failure kinds distributed equally; CF1 - CF3 if not
                 defined

:since: v0.1.00
        """

        if (burst_count < 1): raise ValueException("At least one failure group is required")
        if (fet < 0): raise ValueException("Failure event time window must not be negative")
        if (duration < fet): raise ValueException("Duration must cover the failure event time window")
        if (density is not None and density < burst_count): raise ValueException("Density {0:d} is below the number of groups {1:d}".format(density, burst_count))

        if (cf_kinds is None): cf_kinds = FailureKind.TRACE_DEFAULT_KINDS
        for kind in cf_kinds: FailureKind.validate(kind)

        self.burst_count = int(burst_count)
        """
Number of failure groups
        """
        self.cf_kinds = tuple(cf_kinds)
        """
Failure kinds distributed equally
        """
        self.density = (None if (density is None) else int(density))
        """
Target number of failures
        """
        self.duration = float(duration)
        """
Trace duration in seconds
        """
        self.fet = float(fet)
        """
Failure event time window in seconds
        """
        self.fgs = fgs
        """
Failure group size distribution
        """
        self.iat = iat
        """
Inter-arrival time distribution in seconds
        """
        self.iat_rescaled = iat_rescaled
        """
True to stretch group starts onto the whole duration
        """
        self.name = name
        """
Profile name
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<FailureProfileModel {0} fgs={1} iat={2} n={3:d}>".format(self.name, self.fgs, self.iat, self.burst_count)
    #

    def get_parameters(self):
        """
Returns the provenance parameters of this profile.

:return: (list) List of ( key, value ) tuples
:since:  v0.1.00
        """

        return [ ( "model", self.name ),
                 ( "fgs", str(self.fgs) ),
                 ( "iat", str(self.iat) ),
                 ( "fet_s", repr(self.fet) ),
                 ( "n", str(self.burst_count) ),
                 ( "duration_s", repr(self.duration) ),
                 ( "density", ("" if (self.density is None) else str(self.density)) ),
                 ( "iat_rescaled", ("true" if (self.iat_rescaled) else "false") ),
                 ( "cf_kinds", ",".join(self.cf_kinds) )
               ]
    #
#
