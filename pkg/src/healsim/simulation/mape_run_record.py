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

class MapeRunRecord(object):
    """
Statistics of one MAPE run.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: simulation
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    def __init__(self, run, trigger_time, changes = 0, unprocessed_issues = 0):
        """
Constructor __init__(MapeRunRecord)

:param run: Run index
:param trigger_time: Virtual time the run started
:param changes: Number of change events processed
:param unprocessed_issues: Issues left over by previous runs

:since: v0.1.00
        """

        self.analyze_duration = 0.0
        """
Virtual analysis duration in seconds
        """
        self.changes = changes
        """
Number of change events processed
        """
        self.execute_duration = 0.0
        """
Virtual execution duration in seconds
        """
        self.executed = [ ]
        """
List of ( template ID, failure kind, completion time, success ) tuples
        """
        self.issues_found = 0
        """
Number of issues after the analysis
        """
        self.plan_duration = 0.0
        """
Virtual planning duration in seconds
        """
        self.rules_failed = 0
        """
Number of failed rule executions
        """
        self.rules_ok = 0
        """
Number of successful rule executions
        """
        self.run = run
        """
Run index
        """
        self.trigger_time = trigger_time
        """
Virtual time the run started
        """
        self.unprocessed_issues = unprocessed_issues
        """
Issues left over by previous runs
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<MapeRunRecord #{0:d} t={1!r} issues={2:d} ok={3:d} failed={4:d}>".format(self.run,
                                                                                          self.trigger_time,
                                                                                          self.issues_found,
                                                                                          self.rules_ok,
                                                                                          self.rules_failed
                                                                                         )
    #

    def add_execution(self, template_id, kind, completion_time, is_successful):
        """
Records a rule execution.

:param template_id: Rule template ID
:param kind: Failure kind of the issue handled
:param completion_time: Virtual completion time
:param is_successful: True if the rule succeeded

:since: v0.1.00
        """

        self.executed.append(( template_id, kind, completion_time, is_successful ))

        if (is_successful): self.rules_ok += 1
        else: self.rules_failed += 1
    #

    def get_end_time(self):
        """
Returns the virtual time the run ended.

:return: (float) End time
:since:  v0.1.00
        """

        return self.trigger_time + self.analyze_duration + self.plan_duration + self.execute_duration
    #

    def get_rules_executed(self):
        """
Returns the number of rules executed.

:return: (int) Rules executed
:since:  v0.1.00
        """

        return self.rules_ok + self.rules_failed
    #

    def get_template_ids(self):
        """
Returns the IDs of the executed rule templates in execution order.

:return: (list) Rule template IDs
:since:  v0.1.00
        """

        return [ execution[0] for execution in self.executed ]
    #
#
