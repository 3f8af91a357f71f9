"""Dynamic longest common substring: partially and fully dynamic engines."""
