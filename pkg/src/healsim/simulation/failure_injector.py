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

from dNG.module.named_loader import NamedLoader
from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.failure_kind import FailureKind

class FailureInjector(object):
    """
Resolves the target selectors of failure trace entries against the live
model and injects the failures.

Selectors in [0, 1) address a stable target position. If the element at
that position is not eligible the following positions are tried, so a
component with an unresolved issue is never hit twice.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: simulation
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, model):
        """
Constructor __init__(FailureInjector)

:param model: Architecture model

:since: v0.1.00
        """

        self.injected = 0
        """
Number of failures injected
        """
        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.model = model
        """
Architecture model
        """
        self.rerolled = 0
        """
Number of entries moved to another target
        """
        self.skipped = 0
        """
Number of entries without any eligible target
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<FailureInjector injected={0:d} rerolled={1:d} skipped={2:d}>".format(self.injected, self.rerolled, self.skipped)
    #

    def inject(self, entry, time = None):
        """
Injects the failure of the given trace entry.

:param entry: Failure trace entry
:param time: Virtual time; the entry time if not defined

:return: (list) Change events caused; empty if the entry was skipped
:since:  v0.1.00
        """

        target = self.resolve(entry)

        if (target is None): _return = [ ]
        else:
            _return = self.model.inject_failure(entry.cf_kind, target, (entry.time if (time is None) else time))
            self.injected += 1
        #

        return _return
    #

    def resolve(self, entry):
        """
Returns the eligible target of the given trace entry.

:param entry: Failure trace entry

:return: (object) Component or connector; None if nothing is eligible
:since:  v0.1.00
        """

        FailureKind.validate(entry.cf_kind)

        if (entry.is_pinned()): _return = self._resolve_pinned(entry)
        else:
            count = self.model.get_target_count(entry.cf_kind)
            start = min(int(entry.target_selector * count), count - 1)

            _return = None

            for offset in range(count):
                element = self.model.get_target_at(entry.cf_kind, (start + offset) % count)

                if (element is not None and self.model.is_eligible(entry.cf_kind, element)):
                    if (offset > 0):
                        self.rerolled += 1

                        if (self.log_handler is not None):
                            self.log_handler.debug("{0!r} moved {1} at {2!r} to {3} after {4:d} positions", self, entry.cf_kind, entry.time, element.id, offset, context = "simulation")
                        #
                    #

                    _return = element
                    break
                #
            #

            if (_return is None): self._skip(entry)
        #

        return _return
    #

    def _resolve_pinned(self, entry):
        """
Returns the element pinned by the given trace entry if it is eligible.

:param entry: Failure trace entry

:return: (object) Component or connector; None if not eligible
:since:  v0.1.00
        """

        try: _return = self.model.get_element(entry.get_pinned_id())
        except ValueException: _return = None

        if (_return is not None and (not self.model.is_eligible(entry.cf_kind, _return))): _return = None
        if (_return is None): self._skip(entry)

        return _return
    #

    def _skip(self, entry):
        """
Counts and logs a trace entry without an eligible target.

:param entry: Failure trace entry

:since: v0.1.00
        """

        self.skipped += 1

        if (self.log_handler is not None):
            self.log_handler.debug("{0!r} found no eligible target for {1!r}", self, entry, context = "simulation")
        #
    #
#
