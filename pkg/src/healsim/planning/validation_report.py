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

class ValidationReport(object):
    """
Violations found while validating a rule set.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    LINKED = "A1"
    """
Every rule is linked to a negative pattern
    """
    DETERMINISTIC = "A2"
    """
Every rule resolves its issue deterministically
    """
    NO_NEW_ISSUES = "A3a"
    """
No rule creates negative matches
    """
    NO_DESTROYED_ISSUES = "A3b"
    """
No rule destroys negative matches of other issues
    """
    INDEPENDENT = "A4"
    """
No rule changes the utility of other matches
    """
    SCOPED = "A5"
    """
No rule enables positive matches outside its scope
    """
    IMPACT = "IMPACT"
    """
Predicted and observed utility increase are equal
    """

    def __init__(self):
        """
Constructor __init__(ValidationReport)

:since: v0.1.00
        """

        self.checked = [ ]
        """
Rule template IDs and failure kinds checked on an instance
        """
        self.violations = [ ]
        """
List of ( assumption, template ID, message ) tuples
        """
    #

    def __str__(self):
        """
python.org: Called by str(object) and the built-in functions format() and
print() to compute the "informal" or nicely printable string
representation of an object.

:return: (str) Report
:since:  v0.1.00
        """

        if (self.is_valid()): _return = "Rule set is valid ({0:d} rule instances checked)".format(len(self.checked))
        else:
            lines = [ "{0} {1}: {2}".format(assumption, template_id, message) for assumption, template_id, message in self.violations ]
            _return = "\n".join(lines)
        #

        return _return
    #

    def add(self, assumption, template_id, message):
        """
Records a violation.

:param assumption: Violated assumption
:param template_id: Rule template ID
:param message: Description

:since: v0.1.00
        """

        self.violations.append(( assumption, template_id, message ))
    #

    def get_assumptions(self, template_id = None):
        """
Returns the violated assumptions.

:param template_id: Rule template ID to filter for

:return: (set) Violated assumptions
:since:  v0.1.00
        """

        return { violation[0] for violation in self.violations if template_id is None or violation[1] == template_id }
    #

    def is_valid(self):
        """
Returns true if no violation was found.

:return: (bool) True if valid
:since:  v0.1.00
        """

        return (len(self.violations) < 1)
    #
#
