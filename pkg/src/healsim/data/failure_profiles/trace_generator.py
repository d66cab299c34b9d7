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
from scipy.stats import truncnorm
import numpy

from dNG.module.named_loader import NamedLoader
from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.failure_kind import FailureKind

from .failure_trace import FailureTrace
from .failure_trace_entry import FailureTraceEntry

class TraceGenerator(object):
    """
Generates failure traces from failure profile parameters. Failures of a
group occur within the failure event time window following a truncated
normal distribution centered in the window.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: failure_profiles
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    OFFSET_SD_DIVISOR = 6.0
    """
The standard deviation of offsets within a group is the failure event time
window divided by this value
    """

    @staticmethod
    def _create_trace(name, seed, duration, burst_starts, group_sizes, times, cf_kinds, random, parameters):
        """
Assigns failure kinds and target selectors and creates the trace.

:param name: Trace name
:param seed: Seed used
:param duration: Trace duration in seconds
:param burst_starts: Group start times
:param group_sizes: Group sizes
:param times: Failure times
:param cf_kinds: Failure kinds distributed equally
:param random: numpy random generator
:param parameters: List of ( key, value ) provenance tuples

:return: (object) FailureTrace instance
:since:  v0.1.00
        """

        times = numpy.asarray(times, dtype = float)
        density = len(times)

        kind_indices = random.permutation(numpy.arange(density) % len(cf_kinds))
        selectors = random.random(density)

        entries = [ FailureTraceEntry(float(times[index]), cf_kinds[kind_indices[index]], float(selectors[index]))
                    for index in numpy.argsort(times, kind = "stable")
                  ]

        bursts = [ ( float(start), int(size) ) for start, size in zip(burst_starts, group_sizes) ]

        _return = FailureTrace(entries, duration, name, seed, parameters, bursts)

        log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        if (log_handler is not None): log_handler.debug("TraceGenerator created {0!r} with seed {1!r}", _return, seed, context = "failure_profiles")

        return _return
    #

    @staticmethod
    def generate_realistic(profile, seed = 0):
        """
Generates a trace following the given failure profile. Group sizes are
normalized to the target density if the profile defines one. Group starts
are stretched onto the duration minus the failure event time window if the
profile requests it or if sampled inter-arrival times exceed it.

:param profile: Failure profile model
:param seed: Random seed

:return: (object) FailureTrace instance
:since:  v0.1.00
        """

        random = default_rng(seed)

        group_sizes = numpy.maximum(1, numpy.rint(profile.fgs.sample(random, profile.burst_count))).astype(int)
        if (profile.density is not None): group_sizes = TraceGenerator.normalize_group_sizes(group_sizes, profile.density)

        burst_starts = numpy.zeros(profile.burst_count, dtype = float)

        if (profile.burst_count > 1):
            burst_starts[1:] = numpy.cumsum(profile.iat.sample_positive(random, profile.burst_count - 1))

            window = profile.duration - profile.fet
            span = burst_starts[-1]

            if (span > 0 and (profile.iat_rescaled or span > window)): burst_starts *= (window / span)
        #

        times = [ ]

        for start, size in zip(burst_starts, group_sizes):
            times.extend(start + TraceGenerator.sample_offsets(profile.fet, size, random))
        #

        times = numpy.minimum(times, profile.duration)

        return TraceGenerator._create_trace(profile.name,
                                            seed,
                                            profile.duration,
                                            burst_starts,
                                            group_sizes,
                                            times,
                                            profile.cf_kinds,
                                            random,
                                            profile.get_parameters()
                                           )
    #

    @staticmethod
    def generate_synthetic(fgs, runs, iat, seed = 0, cf_kinds = None):
        """
Generates a trace of equally sized failure groups. All failures of a group
occur at the group start.

:param fgs: Failure group size
:param runs: Number of groups
:param iat: Constant inter-arrival time in seconds
:param seed: Random seed
:param cf_kinds: Failure kinds distributed equally; CF1 - CF3 if not
                 defined

:return: (object) FailureTrace instance
:since:  v0.1.00
        """

        if (fgs < 1 or runs < 1): raise ValueException("Failure group size and runs must be positive")
        if (iat < 0): raise ValueException("Inter-arrival time must not be negative")

        if (cf_kinds is None): cf_kinds = FailureKind.TRACE_DEFAULT_KINDS
        for kind in cf_kinds: FailureKind.validate(kind)

        random = default_rng(seed)

        burst_starts = [ run * float(iat) for run in range(runs) ]
        times = [ start for start in burst_starts for _ in range(fgs) ]

        parameters = [ ( "model", "synthetic" ),
                       ( "fgs", str(fgs) ),
                       ( "runs", str(runs) ),
                       ( "iat", repr(float(iat)) ),
                       ( "fet_s", "0.0" ),
                       ( "cf_kinds", ",".join(cf_kinds) )
                     ]

        return TraceGenerator._create_trace("synthetic",
                                            seed,
                                            runs * float(iat),
                                            burst_starts,
                                            [ fgs ] * runs,
                                            times,
                                            tuple(cf_kinds),
                                            random,
                                            parameters
                                           )
    #

    @staticmethod
    def normalize_group_sizes(group_sizes, density):
        """
Scales the group sizes to sum up to the given density. Fractional parts
are distributed by the largest remainder; every group keeps at least one
failure.

:param group_sizes: Sampled group sizes
:param density: Target number of failures

:return: (object) numpy array of group sizes
:since:  v0.1.00
        """

        group_sizes = numpy.asarray(group_sizes, dtype = int)
        group_count = len(group_sizes)

        if (density < group_count): raise ValueException("Density {0:d} is below the number of groups {1:d}".format(density, group_count))

        total = int(group_sizes.sum())
        if (total == density): return group_sizes.copy()

        scaled = group_sizes * (float(density) / total)
        _return = numpy.maximum(1, numpy.floor(scaled)).astype(int)

        remainders = scaled - numpy.floor(scaled)
        order = numpy.argsort(-1 * remainders, kind = "stable")
        residual = density - int(_return.sum())

        while (residual > 0):
            for index in order[:residual]: _return[index] += 1
            residual = density - int(_return.sum())
        #

        while (residual < 0):
            for index in order[::-1]:
                if (_return[index] > 1):
                    _return[index] -= 1
                    residual += 1

                    if (residual == 0): break
                #
            #
        #

        return _return
    #

    @staticmethod
    def sample_offsets(fet, size, random):
        """
Samples failure offsets within a group.

:param fet: Failure event time window in seconds
:param size: Group size
:param random: numpy random generator

:return: (object) numpy array of offsets in [0, fet]
:since:  v0.1.00
        """

        if (fet <= 0): _return = numpy.zeros(size, dtype = float)
        else:
            mean = fet / 2.0
            sd = fet / TraceGenerator.OFFSET_SD_DIVISOR

            _return = truncnorm.rvs((0 - mean) / sd, (fet - mean) / sd, loc = mean, scale = sd, size = size, random_state = random)
            _return = numpy.clip(_return, 0.0, fet)
        #

        return _return
    #
#
