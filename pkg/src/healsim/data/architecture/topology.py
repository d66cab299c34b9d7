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

class Topology(object):
    """
The fixed per-shop layout: slot names and the required to provided
interface bindings between slots.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: architecture
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    SLOTS = ( "Authentication Service",
              "Bid and Buy Service",
              "Comment Item Service",
              "Comment Management Service",
              "Future Sales Service",
              "Inventory Service",
              "Item Management Service",
              "Last Second Sales Item Filter",
              "Persistence Service",
              "Query Service",
              "Recommendation Item Filter",
              "Reputation Service",
              "Seasonal Items Filter",
              "Shopping Cart Service",
              "User Management Service",
              "Buy Now Item Filter",
              "Past Sales Item Filter",
              "Region Item Filter"
            )
    """
Slot names
    """

    CONNECTIONS = ( ( 1, 0 ), ( 1, 6 ), ( 1, 16 ), ( 7, 0 ), ( 7, 6 ),
                    ( 16, 10 ), ( 6, 10 ), ( 14, 10 ), ( 14, 16 ), ( 11, 2 ),
                    ( 2, 3 ), ( 3, 4 ), ( 4, 5 ), ( 5, 8 ), ( 8, 9 ),
                    ( 9, 12 ), ( 12, 13 ), ( 13, 15 ), ( 15, 17 ), ( 17, 6 ),
                    ( 11, 0 ), ( 15, 14 ), ( 11, 14 ), ( 7, 16 ), ( 1, 14 )
                  )
    """
Connector positions as "(source slot, target slot)" where the source
requires the interface provided by the target
    """

    ALTERNATIVES_PER_SLOT = 3
    """
Component types available per slot
    """
    CRITICALITY_RANGE = ( 1, 10 )
    """
Inclusive criticality range
    """
    RELIABILITY_RANGE = ( 0.5, 1.0 )
    """
Reliability range of generated component types
    """

    @staticmethod
    def get_connector_count():
        """
Returns the number of connectors per shop.

:return: (int) Connector count
:since:  v0.1.00
        """

        return len(Topology.CONNECTIONS)
    #

    @staticmethod
    def get_interface_name(slot):
        """
Returns the name of the interface provided by the given slot.

:param slot: Slot index

:return: (str) Interface name
:since:  v0.1.00
        """

        return "I{0}".format(Topology.SLOTS[slot].replace(" ", ""))
    #

    @staticmethod
    def get_slot_count():
        """
Returns the number of slots per shop.

:return: (int) Slot count
:since:  v0.1.00
        """

        return len(Topology.SLOTS)
    #
#
