"""Reynolds averaging, gamma reduction and graded dimensions."""
