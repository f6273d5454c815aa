"""Core test package"""