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

from numpy.random import default_rng
import numpy

from dNG.data.logging.log_line import LogLine
from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.failure_kind import FailureKind
from healsim.runtime.insufficient_tail_samples_exception import InsufficientTailSamplesException

from .distribution import Distribution
from .failure_profile_model import FailureProfileModel

class ProfileVariants(object):
    """
Derives failure profile models of variants from a generated base trace. Group size
and inter-arrival time statistics are estimated by bootstrapping the base
trace's failure groups.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: failure_profiles
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    BIGBURST_MIN_GROUP_SIZE = 100
    """
Smallest group size considered part of the tail
    """
    BIGBURST_MIN_IAT = 1000.0
    """
Smallest inter-arrival time in seconds considered between big bursts
    """
    BOOTSTRAP_RESAMPLES = 1000
    """
Default number of bootstrap resamples
    """

    @staticmethod
    def _get_base_parameters(base_trace):
        """
Returns the failure event time window and failure kinds of the base trace.

:param base_trace: Base failure trace

:return: (tuple) Failure event time window and failure kinds
:since:  v0.1.00
        """

        if (len(base_trace.bursts) < 1): raise ValueException("{0!r} does not provide failure groups".format(base_trace))

        fet = float(base_trace.get_parameter("fet_s", "0.0"))
        cf_kinds = base_trace.get_parameter("cf_kinds")
        cf_kinds = (FailureKind.TRACE_DEFAULT_KINDS if (cf_kinds in ( None, "" )) else tuple(cf_kinds.split(",")))

        return ( fet, cf_kinds )
    #

    @staticmethod
    def bootstrap_means(values, resamples, random):
        """
Returns the means of bootstrap resamples drawn with replacement.

:param values: Sample
:param resamples: Number of resamples
:param random: numpy random generator

:return: (object) numpy array of resample means
:since:  v0.1.00
        """

        values = numpy.asarray(values, dtype = float)
        if (len(values) < 1): raise ValueException("Bootstrapping requires at least one value")
        if (resamples < 1): raise ValueException("Bootstrapping requires at least one resample")

        indices = random.integers(0, len(values), size = ( resamples, len(values) ))
        return values[indices].mean(axis = 1)
    #

    @staticmethod
    def bootstrap_statistics(values, resamples, random):
        """
Returns the mean and standard deviation of the bootstrap resample means.

:param values: Sample
:param resamples: Number of resamples
:param random: numpy random generator

:return: (tuple) Mean and standard deviation
:since:  v0.1.00
        """

        means = ProfileVariants.bootstrap_means(values, resamples, random)
        return ( float(means.mean()), (float(means.std(ddof = 1)) if (resamples > 1) else 0.0) )
    #

    @staticmethod
    def derive_bigburst_variant(base_trace, seed = 0, resamples = BOOTSTRAP_RESAMPLES):
        """
Derives a variant of few large failure groups from the tail of the base
group sizes and the long inter-arrival times.

:param base_trace: Base failure trace
:param seed: Random seed used for bootstrapping
:param resamples: Number of bootstrap resamples

:return: (object) FailureProfileModel instance
:since:  v0.1.00
        """

        fet, cf_kinds = ProfileVariants._get_base_parameters(base_trace)
        random = default_rng(seed)

        group_sizes = numpy.asarray(base_trace.get_group_sizes(), dtype = float)
        tail_sizes = group_sizes[group_sizes >= ProfileVariants.BIGBURST_MIN_GROUP_SIZE]

        if (len(tail_sizes) < 1):
            raise InsufficientTailSamplesException("{0!r} lacks failure groups of at least {1:d} failures".format(base_trace, ProfileVariants.BIGBURST_MIN_GROUP_SIZE))
        #

        fgs_mean, fgs_sd = ProfileVariants.bootstrap_statistics(tail_sizes, resamples, random)

        iats = numpy.diff(numpy.asarray(base_trace.get_burst_starts(), dtype = float))
        tail_iats = iats[iats >= ProfileVariants.BIGBURST_MIN_IAT]

        if (len(tail_iats) < 1 and len(iats) > 0):
            LogLine.warning("{0!r} lacks inter-arrival times of at least {1!r}s; using all of them", base_trace, ProfileVariants.BIGBURST_MIN_IAT, context = "failure_profiles")
            tail_iats = iats
        #

        if (len(tail_iats) < 1): iat = Distribution.constant(base_trace.duration)
        else:
            iat_mean, iat_sd = ProfileVariants.bootstrap_statistics(tail_iats, resamples, random)
            iat = Distribution.normal(iat_mean, 2 * iat_sd)
        #

        density = base_trace.get_density()
        burst_count = max(1, min(density, int(round(density / fgs_mean))))

        _return = FailureProfileModel("bigburst",
                                      Distribution.normal(fgs_mean, 2 * fgs_sd),
                                      iat,
                                      fet,
                                      burst_count,
                                      base_trace.duration,
                                      density,
                                      True,
                                      cf_kinds
                                     )

        return _return
    #

    @staticmethod
    def derive_single_variant(base_trace):
        """
Derives a variant of single failures equally spaced over the duration.

:param base_trace: Base failure trace

:return: (object) FailureProfileModel instance
:since:  v0.1.00
        """

        _, cf_kinds = ProfileVariants._get_base_parameters(base_trace)
        density = base_trace.get_density()

        _return = FailureProfileModel("single",
                                      Distribution.constant(1),
                                      Distribution.constant(base_trace.duration / density),
                                      0.0,
                                      density,
                                      base_trace.duration,
                                      density,
                                      False,
                                      cf_kinds
                                     )

        return _return
    #

    @staticmethod
    def derive_uniform_variant(base_trace, seed = 0, resamples = BOOTSTRAP_RESAMPLES):
        """
Derives a variant keeping the number of groups and the density with
normally distributed group sizes arriving at a constant rate.

:param base_trace: Base failure trace
:param seed: Random seed used for bootstrapping
:param resamples: Number of bootstrap resamples

:return: (object) FailureProfileModel instance
:since:  v0.1.00
        """

        fet, cf_kinds = ProfileVariants._get_base_parameters(base_trace)
        random = default_rng(seed)

        group_sizes = base_trace.get_group_sizes()
        fgs_mean, fgs_sd = ProfileVariants.bootstrap_statistics(group_sizes, resamples, random)

        burst_count = len(group_sizes)

        _return = FailureProfileModel("uniform",
                                      Distribution.normal(fgs_mean, 2 * fgs_sd),
                                      Distribution.constant(base_trace.duration / burst_count),
                                      fet,
                                      burst_count,
                                      base_trace.duration,
                                      base_trace.get_density(),
                                      False,
                                      cf_kinds
                                     )

        return _return
    #
#
