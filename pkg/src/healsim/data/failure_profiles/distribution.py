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

import re

import numpy

from dNG.runtime.value_exception import ValueException

class Distribution(object):
    """
Probability distribution of failure group sizes or inter-arrival times.
The textual form is "LOGN(mu,sigma)", "N(mu,sigma)" or a constant number.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: failure_profiles
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    KIND_CONSTANT = "CONSTANT"
    """
Constant value
    """
    KIND_LOGNORMAL = "LOGNORMAL"
    """
Log-normal distribution with the mean and standard deviation of the
underlying normal distribution
    """
    KIND_NORMAL = "NORMAL"
    """
Normal distribution
    """
    MAX_RESAMPLING_ROUNDS = 1000
    """
Maximum rounds to replace non-positive samples
    """
    RE_PARAMETERIZED = re.compile("^\\s*(LOGN|N)\\s*\\(\\s*([^,\\s]+)\\s*,\\s*([^\\)\\s]+)\\s*\\)\\s*$", re.I)
    """
RegExp to parse "LOGN(mu,sigma)" and "N(mu,sigma)"
    """

    def __init__(self, kind, parameters):
        """
Constructor __init__(Distribution)

:param kind: Distribution kind
:param parameters: Tuple of distribution parameters

:since: v0.1.00
        """

        if (kind == Distribution.KIND_CONSTANT): expected_parameters = 1
        elif (kind in ( Distribution.KIND_LOGNORMAL, Distribution.KIND_NORMAL )): expected_parameters = 2
        else: raise ValueException("Unknown distribution kind '{0}'".format(kind))

        if (len(parameters) != expected_parameters): raise ValueException("Distribution {0} requires {1:d} parameters".format(kind, expected_parameters))
        if (expected_parameters == 2 and parameters[1] < 0): raise ValueException("Standard deviation must not be negative")

        self.kind = kind
        """
Distribution kind
        """
        self.parameters = tuple(float(parameter) for parameter in parameters)
        """
Tuple of distribution parameters
        """
    #

    def __eq__(self, other):
        """
python.org: The so-called "rich comparison" methods.

:param other: Object to compare with

:return: (bool) True if equal
:since:  v0.1.00
        """

        return (isinstance(other, Distribution) and self.kind == other.kind and self.parameters == other.parameters)
    #

    def __hash__(self):
        """
python.org: Called by built-in function hash().

:return: (int) Hash value
:since:  v0.1.00
        """

        return hash(( self.kind, self.parameters ))
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<Distribution {0}>".format(self)
    #

    def __str__(self):
        """
python.org: Called by str(object) and the built-in functions format() and
print() to compute the "informal" or nicely printable string
representation of an object.

:return: (str) Textual form
:since:  v0.1.00
        """

        if (self.kind == Distribution.KIND_CONSTANT): _return = repr(self.parameters[0])
        else:
            _return = "{0}({1!r},{2!r})".format(("LOGN" if (self.kind == Distribution.KIND_LOGNORMAL) else "N"),
                                                self.parameters[0],
                                                self.parameters[1]
                                               )
        #

        return _return
    #

    def get_mean(self):
        """
Returns the mean of the distribution.

:return: (float) Mean
:since:  v0.1.00
        """

        if (self.kind == Distribution.KIND_LOGNORMAL): _return = float(numpy.exp(self.parameters[0] + (self.parameters[1] ** 2) / 2.0))
        else: _return = self.parameters[0]

        return _return
    #

    def sample(self, random, size):
        """
Draws samples.

:param random: numpy random generator
:param size: Number of samples

:return: (object) numpy array of samples
:since:  v0.1.00
        """

        if (self.kind == Distribution.KIND_CONSTANT): _return = numpy.full(size, self.parameters[0], dtype = float)
        elif (self.kind == Distribution.KIND_LOGNORMAL): _return = random.lognormal(self.parameters[0], self.parameters[1], size)
        else: _return = random.normal(self.parameters[0], self.parameters[1], size)

        return _return
    #

    def sample_positive(self, random, size):
        """
Draws samples and redraws non-positive ones.

:param random: numpy random generator
:param size: Number of samples

:return: (object) numpy array of positive samples
:since:  v0.1.00
        """

        _return = self.sample(random, size)

        for _ in range(Distribution.MAX_RESAMPLING_ROUNDS):
            invalid = (_return <= 0)
            invalid_count = int(numpy.count_nonzero(invalid))
            if (invalid_count < 1): break

            _return[invalid] = self.sample(random, invalid_count)
        #

        if (numpy.any(_return <= 0)): raise ValueException("{0!r} does not yield positive samples".format(self))

        return _return
    #

    @staticmethod
    def constant(value):
        """
Returns a constant distribution.

:param value: Constant value

:return: (object) Distribution instance
:since:  v0.1.00
        """

        return Distribution(Distribution.KIND_CONSTANT, ( value, ))
    #

    @staticmethod
    def lognormal(mu, sigma):
        """
Returns a log-normal distribution.

:param mu: Mean of the underlying normal distribution
:param sigma: Standard deviation of the underlying normal distribution

:return: (object) Distribution instance
:since:  v0.1.00
        """

        return Distribution(Distribution.KIND_LOGNORMAL, ( mu, sigma ))
    #

    @staticmethod
    def normal(mu, sigma):
        """
Returns a normal distribution.

:param mu: Mean
:param sigma: Standard deviation

:return: (object) Distribution instance
:since:  v0.1.00
        """

        return Distribution(Distribution.KIND_NORMAL, ( mu, sigma ))
    #

    @staticmethod
    def parse(value):
        """
Parses the textual form of a distribution.

:param value: "LOGN(mu,sigma)", "N(mu,sigma)" or a number

:return: (object) Distribution instance
:since:  v0.1.00
        """

        re_result = Distribution.RE_PARAMETERIZED.match(value)

        try:
            if (re_result is None): _return = Distribution.constant(float(value))
            else:
                parameters = ( float(re_result.group(2)), float(re_result.group(3)) )

                _return = (Distribution.lognormal(*parameters)
                           if (re_result.group(1).upper() == "LOGN") else
                           Distribution.normal(*parameters)
                          )
            #
        except ValueError as handled_exception: raise ValueException("Invalid distribution '{0}'".format(value), _exception = handled_exception)

        return _return
    #
#
