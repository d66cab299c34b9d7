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

class FailureTraceEntry(object):
    """
One failure of a trace. The target selector is either a float in [0, 1)
mapped onto the target positions of the failure kind or "id:<element ID>"
pinning a model element.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: failure_profiles
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    PINNED_PREFIX = "id:"
    """
Prefix of selectors pinning a model element
    """

    def __init__(self, time, cf_kind, target_selector):
        """
Constructor __init__(FailureTraceEntry)

:param time: Virtual time in seconds
:param cf_kind: Failure kind
:param target_selector: Float in [0, 1) or "id:<element ID>"

:since: v0.1.00
        """

        FailureKind.validate(cf_kind)

        if (isinstance(target_selector, str) and (not target_selector.startswith(FailureTraceEntry.PINNED_PREFIX))):
            try: target_selector = float(target_selector)
            except ValueError as handled_exception: raise ValueException("Invalid target selector '{0}'".format(target_selector), _exception = handled_exception)
        #

        if ((not isinstance(target_selector, str)) and (target_selector < 0 or target_selector >= 1)):
            raise ValueException("Target selector {0!r} is out of range [0, 1)".format(target_selector))
        #

        if (time < 0): raise ValueException("Failure time must not be negative")

        self.cf_kind = cf_kind
        """
Failure kind
        """
        self.target_selector = target_selector
        """
Float in [0, 1) or "id:<element ID>"
        """
        self.time = float(time)
        """
Virtual time in seconds
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<FailureTraceEntry t={0!r} {1} {2}>".format(self.time, self.cf_kind, self.get_selector_string())
    #

    def get_pinned_id(self):
        """
Returns the ID of the pinned model element.

:return: (str) Element ID; None if not pinned
:since:  v0.1.00
        """

        return (self.target_selector[len(FailureTraceEntry.PINNED_PREFIX):] if (self.is_pinned()) else None)
    #

    def get_selector_string(self):
        """
Returns the textual form of the target selector.

:return: (str) Target selector
:since:  v0.1.00
        """

        return (self.target_selector if (self.is_pinned()) else repr(self.target_selector))
    #

    def is_pinned(self):
        """
Returns true if the selector pins a model element.

:return: (bool) True if pinned
:since:  v0.1.00
        """

        return isinstance(self.target_selector, str)
    #

    @staticmethod
    def pinned(time, cf_kind, element_id):
        """
Returns an entry pinned to the given model element.

:param time: Virtual time in seconds
:param cf_kind: Failure kind
:param element_id: Model element ID

:return: (object) FailureTraceEntry instance
:since:  v0.1.00
        """

        return FailureTraceEntry(time, cf_kind, "{0}{1}".format(FailureTraceEntry.PINNED_PREFIX, element_id))
    #
#
