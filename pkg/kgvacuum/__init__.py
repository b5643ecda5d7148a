"""kgvacuum - classical statistical field model of the Klein-Gordon vacuum."""
