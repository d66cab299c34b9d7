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

from .distribution import Distribution
from .failure_profile_model import FailureProfileModel
from .profile_variants import ProfileVariants
from .trace_generator import TraceGenerator

class FailureProfiles(object):
    """
Failure profiles of volunteer and grid computing systems and the variants
derived from the grid profile.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: failure_profiles
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    DAY = 86400.0
    """
Seconds per day
    """
    HOUR = 3600.0
    """
Seconds per hour
    """
    PRESETS = { "lri": { "fgs": ( 1.32, 0.77 ),
                         "iat": ( -1.46, 1.28 ),
                         "fet": 100.0,
                         "short": ( 50, 41.2 * HOUR, 318 ),
                         "long": ( 1355, 30 * DAY, 7568 )
                       },
                "deug": { "fgs": ( 2.15, 0.70 ),
                          "iat": ( -2.28, 1.35 ),
                          "fet": 150.0,
                          "short": ( 50, 21.4 * HOUR, 666 ),
                          "long": ( 2843, 30 * DAY, 32895 )
                        },
                "grid5000": { "fgs": ( 1.88, 1.25 ),
                              "iat": ( -1.39, 1.03 ),
                              "fet": 250.0,
                              "short": ( 50, 24 * HOUR, 1116 ),
                              "long": ( 1678, 30 * DAY, 25279 )
                            }
              }
    """
Log-normal group size and inter-arrival time parameters, failure event time
window and ( groups, duration, density ) per trace length
    """
    VARIANT_BASE = "grid5000"
    """
Profile the variants are derived from
    """
    VARIANTS = ( "uniform", "single", "bigburst" )
    """
Derived profile variants
    """

    @staticmethod
    def generate(name, seed = 0, length = "short"):
        """
Generates the trace of the given profile.

:param name: Profile name
:param seed: Random seed
:param length: "short" or "long"

:return: (object) FailureTrace instance
:since:  v0.1.00
        """

        return TraceGenerator.generate_realistic(FailureProfiles.get_model(name, seed, length), seed)
    #

    @staticmethod
    def get_model(name, seed = 0, length = "short"):
        """
Returns the failure profile model of the given profile. Variants are
derived from a trace of the variant base profile generated with the given
seed.

:param name: Profile name
:param seed: Random seed
:param length: "short" or "long"

:return: (object) FailureProfileModel instance
:since:  v0.1.00
        """

        if (name in FailureProfiles.VARIANTS):
            base_trace = TraceGenerator.generate_realistic(FailureProfiles.get_profile(FailureProfiles.VARIANT_BASE), seed)

            if (name == "uniform"): _return = ProfileVariants.derive_uniform_variant(base_trace, seed)
            elif (name == "single"): _return = ProfileVariants.derive_single_variant(base_trace)
            else: _return = ProfileVariants.derive_bigburst_variant(base_trace, seed)
        else: _return = FailureProfiles.get_profile(name, length)

        return _return
    #

    @staticmethod
    def get_names():
        """
Returns the profile names available.

:return: (list) Profile names
:since:  v0.1.00
        """

        return list(FailureProfiles.PRESETS.keys()) + list(FailureProfiles.VARIANTS)
    #

    @staticmethod
    def get_profile(name, length = "short"):
        """
Returns the failure profile model of the given realistic profile.

:param name: Profile name
:param length: "short" or "long"

:return: (object) FailureProfileModel instance
:since:  v0.1.00
        """

        preset = FailureProfiles.PRESETS.get(name.lower())

        if (preset is None): raise ValueException("Unknown failure profile '{0}'".format(name))
        if (length not in ( "short", "long" )): raise ValueException("Unknown trace length '{0}'".format(length))

        burst_count, duration, density = preset[length]

        return FailureProfileModel(name.lower(),
                                   Distribution.lognormal(*preset['fgs']),
                                   Distribution.lognormal(*preset['iat']),
                                   preset['fet'],
                                   burst_count,
                                   duration,
                                   density,
                                   True
                                  )
    #
#
