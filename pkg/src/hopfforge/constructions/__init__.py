"""Named builders of triangulations and cubical decompositions."""
