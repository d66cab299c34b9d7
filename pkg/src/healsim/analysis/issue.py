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

class Issue(object):
    """
An issue is a match of a negative utility pattern that has not been
repaired yet.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: analysis
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, _id, match, model):
        """
Constructor __init__(Issue)

:param _id: Issue ID
:param match: Negative match with cached utility
:param model: Architecture model the match was found in

:since: v0.1.00
        """

        self.handled_by = None
        """
Rule match selected to handle this issue
        """
        self.id = _id
        """
Issue ID
        """
        self.match = match
        """
Negative match
        """
        self.model = model
        """
Architecture model the match was found in
        """
        self.utility_drop = match.cached_utility
        """
Utility contribution of the negative match
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<Issue {0} {1}:{2}>".format(self.id, self.match.pattern.id, self.match.anchor.id)
    #

    @property
    def affected_component(self):
        """
Returns the component affected by this issue.

:return: (object) Component instance
:since:  v0.1.00
        """

        return self.match.get_affected_component()
    #

    @property
    def key(self):
        """
Returns the issue key.

:return: (tuple) Pattern ID and anchor ID
:since:  v0.1.00
        """

        return self.match.key
    #

    @property
    def kind(self):
        """
Returns the failure kind of this issue.

:return: (str) Failure kind
:since:  v0.1.00
        """

        return self.match.pattern.id
    #

    @property
    def pattern(self):
        """
Returns the negative pattern matched.

:return: (object) Pattern instance
:since:  v0.1.00
        """

        return self.match.pattern
    #

    def check(self, model = None):
        """
Returns true if the negative match still exists.

:param model: Architecture model; the one the issue was found in if not
              defined

:return: (bool) True if valid
:since:  v0.1.00
        """

        if (model is None): model = self.model
        return (self.match.pattern.match(model, self.match.anchor) is not None)
    #
#
