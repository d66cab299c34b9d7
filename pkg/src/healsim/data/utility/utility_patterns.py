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

from healsim.data.architecture.architecture_model import ArchitectureModel
from healsim.data.architecture.component import Component
from healsim.data.architecture.connector import Connector
from healsim.data.architecture.failure_kind import FailureKind

from .pattern import Pattern

class ComponentUtilityPattern(Pattern):
    """
Positive pattern matching the component occupying a slot regardless of its
state. Its utility is criticality times reliability times connectivity.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: utility
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self):
        """
Constructor __init__(ComponentUtilityPattern)

:since: v0.1.00
        """

        Pattern.__init__(self, UtilityPatterns.COMPONENT_UTILITY, Pattern.POLARITY_POSITIVE, Pattern.ANCHOR_COMPONENT)
    #

    def get_utility(self, match):
        """
Returns the utility contribution of the given match.

:param match: Match of this pattern

:return: (float) Utility contribution
:since:  v0.1.00
        """

        return UtilityPatterns.get_component_utility(match.anchor)
    #

    def _match(self, anchor):
        """
Returns the role bindings if the pattern matches on the given anchor.

:param anchor: Anchor element

:return: (dict) Role bindings; None if not matched
:since:  v0.1.00
        """

        # Type and every connector are visited to compute the connectivity
        self.visits += 1 + anchor.get_connectivity()
        return { "component": anchor, "type": anchor.component_type }
    #
#

class ComponentStatePattern(Pattern):
    """
Negative pattern matching components in a failure state. CF2 matches
started components with at least the given number of failures.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: utility
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, cf_kind, state, failure_threshold = 0):
        """
Constructor __init__(ComponentStatePattern)

:param cf_kind: Failure kind characterized
:param state: Component state matched
:param failure_threshold: Minimum number of failures

:since: v0.1.00
        """

        Pattern.__init__(self, cf_kind, Pattern.POLARITY_NEGATIVE, Pattern.ANCHOR_COMPONENT)

        self.failure_threshold = failure_threshold
        """
Minimum number of failures
        """
        self.state = state
        """
Component state matched
        """
    #

    def get_utility(self, match):
        """
Returns the utility contribution of the given match.

:param match: Match of this pattern

:return: (float) Utility contribution
:since:  v0.1.00
        """

        return -1 * UtilityPatterns.get_component_utility(match.anchor)
    #

    def _match(self, anchor):
        """
Returns the role bindings if the pattern matches on the given anchor.

:param anchor: Anchor element

:return: (dict) Role bindings; None if not matched
:since:  v0.1.00
        """

        self.visits += 1

        return ({ "component": anchor }
                if (anchor.state == self.state and len(anchor.failures) >= self.failure_threshold) else
                None
               )
    #
#

class CrashedConnectorPattern(Pattern):
    """
Negative pattern matching crashed connectors. The affected component is
the one requiring the interface.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: utility
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self):
        """
Constructor __init__(CrashedConnectorPattern)

:since: v0.1.00
        """

        Pattern.__init__(self, FailureKind.CF4, Pattern.POLARITY_NEGATIVE, Pattern.ANCHOR_CONNECTOR)
    #

    def get_utility(self, match):
        """
Returns the utility lost by the affected component for one connector.

:param match: Match of this pattern

:return: (float) Utility contribution
:since:  v0.1.00
        """

        component = match.bindings['component']
        return -1 * component.criticality * component.component_type.reliability
    #

    def _match(self, anchor):
        """
Returns the role bindings if the pattern matches on the given anchor.

:param anchor: Anchor element

:return: (dict) Role bindings; None if not matched
:since:  v0.1.00
        """

        self.visits += 1
        return ({ "component": anchor.source, "connector": anchor } if (anchor.state == Connector.STATE_CRASHED) else None)
    #
#

class UtilityPatterns(object):
    """
Registry of the utility patterns of the marketplace.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: utility
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    COMPONENT_UTILITY = "component_utility"
    """
ID of the positive component utility pattern
    """

    @staticmethod
    def create_all():
        """
Creates a new set of utility pattern instances.

:return: (list) Pattern instances; positive first
:since:  v0.1.00
        """

        return [ ComponentUtilityPattern(),
                 ComponentStatePattern(FailureKind.CF1, Component.STATE_CRASHED),
                 ComponentStatePattern(FailureKind.CF2, Component.STATE_STARTED, ArchitectureModel.CF2_EXCEPTION_COUNT),
                 ComponentStatePattern(FailureKind.CF3, Component.STATE_REMOVED),
                 CrashedConnectorPattern()
               ]
    #

    @staticmethod
    def get(_id):
        """
Returns a new pattern instance with the given ID.

:param _id: Pattern ID

:return: (object) Pattern instance
:since:  v0.1.00
        """

        for pattern in UtilityPatterns.create_all():
            if (pattern.id == _id): return pattern
        #

        raise ValueException("Unknown utility pattern '{0}'".format(_id))
    #

    @staticmethod
    def get_all():
        """
Returns new pattern instances with their own match counters.

:return: (list) Pattern instances; positive first
:since:  v0.1.00
        """

        return UtilityPatterns.create_all()
    #

    @staticmethod
    def get_component_utility(component):
        """
Returns criticality times reliability times connectivity of the given
component.

:param component: Component instance

:return: (float) Component utility
:since:  v0.1.00
        """

        return component.criticality * component.component_type.reliability * component.get_connectivity()
    #

    @staticmethod
    def get_negative(patterns = None):
        """
Returns the negative patterns of the given list.

:param patterns: Pattern instances; new ones if not defined

:return: (list) Negative pattern instances
:since:  v0.1.00
        """

        if (patterns is None): patterns = UtilityPatterns.get_all()
        return [ pattern for pattern in patterns if pattern.is_negative() ]
    #
#
