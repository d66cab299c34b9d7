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

from healsim.data.architecture.component import Component
from healsim.data.architecture.connector import Connector

from .match import Match

class Pattern(object):
    """
Abstract utility pattern. Matching is anchored: a pattern is evaluated on
one anchor element and visits a bounded neighbourhood only.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: utility
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    ANCHOR_COMPONENT = "component"
    """
Pattern anchored on a component
    """
    ANCHOR_CONNECTOR = "connector"
    """
Pattern anchored on a connector
    """
    POLARITY_NEGATIVE = "NEGATIVE"
    """
Negative pattern characterizing a critical failure
    """
    POLARITY_POSITIVE = "POSITIVE"
    """
Positive pattern contributing to the overall utility
    """

    def __init__(self, _id, polarity, anchor_kind):
        """
Constructor __init__(Pattern)

:param _id: Pattern ID
:param polarity: Pattern polarity
:param anchor_kind: Kind of anchor elements

:since: v0.1.00
        """

        self.anchor_kind = anchor_kind
        """
Kind of anchor elements
        """
        self.id = _id
        """
Pattern ID
        """
        self.polarity = polarity
        """
Pattern polarity
        """
        self.visits = 0
        """
Number of model elements visited while matching
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<Pattern {0} {1}>".format(self.id, self.polarity)
    #

    def get_candidates(self, model):
        """
Returns all anchor candidates of the given model.

:param model: Architecture model

:return: (list) Anchor candidates
:since:  v0.1.00
        """

        return (model.get_connectors() if (self.anchor_kind == Pattern.ANCHOR_CONNECTOR) else model.get_components())
    #

    def get_utility(self, match):
        """
Returns the utility contribution of the given match.

:param match: Match of this pattern

:return: (float) Utility contribution
:since:  v0.1.00
        """

        raise NotImplementedError()
    #

    def is_anchor(self, element):
        """
Returns true if the element may be an anchor of this pattern.

:param element: Component or connector

:return: (bool) True if the element kind fits
:since:  v0.1.00
        """

        return isinstance(element, (Connector if (self.anchor_kind == Pattern.ANCHOR_CONNECTOR) else Component))
    #

    def is_negative(self):
        """
Returns true for negative patterns.

:return: (bool) True if negative
:since:  v0.1.00
        """

        return (self.polarity == Pattern.POLARITY_NEGATIVE)
    #

    def match(self, model, anchor):
        """
Matches this pattern on the given anchor.

:param model: Architecture model
:param anchor: Anchor element

:return: (object) Match instance; None if not matched
:since:  v0.1.00
        """

        _return = None

        if (self.is_anchor(anchor) and model.contains(anchor)):
            self.visits += 1

            bindings = self._match(anchor)
            if (bindings is not None): _return = Match(self, anchor, bindings)
        #

        return _return
    #

    def _match(self, anchor):
        """
Returns the role bindings if the pattern matches on the given anchor.

:param anchor: Anchor element

:return: (dict) Role bindings; None if not matched
:since:  v0.1.00
        """

        raise NotImplementedError()
    #
#
