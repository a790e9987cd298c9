# --------------------------------------------------------------------------------------------------------------
# garside_cells: Garside normal forms of positive braids read off the action on a cell category
# --------------------------------------------------------------------------------------------------------------

__version__ = "1.0.0"
