"""Utils test package"""